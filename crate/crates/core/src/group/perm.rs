use std::collections::HashMap;
use std::fmt;

use super::{FiniteGroup, GroupError};

/// A permutation of `0..degree`, stored as its image list.
///
/// Composition is right-to-left: `(p * q)(i) = p(q(i))`, so the rightmost
/// factor acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 4 5)` on `degree` points.
    /// The empty string and `()` denote the identity.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::InvalidPermutation(text.to_string());
        let mut images: Vec<usize> = (0..degree).collect();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = open.find(')').ok_or_else(bad)?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let points = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            if points.iter().any(|&p| p == 0 || p > degree) {
                return Err(bad());
            }
            // Cycles are applied right-to-left, so fold from the right.
            let cycle = Self::cycle(degree, &points.iter().map(|p| p - 1).collect::<Vec<_>>())?;
            let current = Permutation(images);
            images = current.compose(&cycle).0;
        }
        Self::from_images(images)
    }

    fn cycle(degree: usize, points: &[usize]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &p) in points.iter().enumerate() {
            images[p] = points[(i + 1) % points.len()];
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.0[point]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut p = self.0[start];
            while p != start {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.0[p];
            }
            let body: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Closure of a set of permutations as a Cayley table.
///
/// Elements are numbered in breadth-first order from the identity (element 0),
/// multiplying on the right by the generators in the given order.
pub fn build_from_permutations(
    generators: &[Permutation],
    cap: usize,
) -> Result<(FiniteGroup, Vec<Permutation>), GroupError> {
    let degree = generators.first().ok_or(GroupError::EmptyGeneratorList)?.degree();
    if generators.iter().any(|g| g.degree() != degree) {
        return Err(GroupError::DegreeMismatch);
    }
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut i = 0;
    while i < elements.len() {
        for g in generators {
            let p = elements[i].compose(g);
            if !index.contains_key(&p) {
                if elements.len() == cap {
                    return Err(GroupError::ClosureExceedsCap(cap));
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        i += 1;
    }
    let n = elements.len();
    let mut mul = vec![0; n * n];
    for (a, pa) in elements.iter().enumerate() {
        for (b, pb) in elements.iter().enumerate() {
            mul[a * n + b] = index[&pa.compose(pb)];
        }
    }
    let group = FiniteGroup::from_trusted(format!("<{} perms>", generators.len()), n, mul);
    Ok((group, elements))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Permutation {
        Permutation::from_cycles(degree, s).unwrap()
    }

    #[test]
    fn cycle_notation_round_trip() {
        let x = p(5, "(1 2)(3 4 5)");
        assert_eq!(x.to_string(), "(1 2)(3 4 5)");
        assert_eq!(p(3, "").to_string(), "()");
        assert!(Permutation::from_cycles(3, "(1 4)").is_err());
    }

    #[test]
    fn right_to_left_composition() {
        // (1 2)(1 3): apply (1 3) first. 1 -> 3 -> 3, 3 -> 1 -> 2, 2 -> 2 -> 1.
        let x = p(3, "(1 2)");
        let y = p(3, "(1 3)");
        assert_eq!(x.compose(&y).to_string(), "(1 3 2)");
        assert_eq!(p(3, "(1 2)(1 3)").to_string(), "(1 3 2)");
    }

    #[test]
    fn single_involution() {
        let (g, _) = build_from_permutations(&[p(2, "(1 2)")], 100).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn transpositions_generate_s3() {
        let (g, _) = build_from_permutations(&[p(3, "(1 2)"), p(3, "(1 3)")], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert!(g.is_associative_exhaustive());
    }

    #[test]
    fn identity_only_is_trivial() {
        let (g, _) = build_from_permutations(&[Permutation::identity(3)], 10).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn empty_and_capped() {
        assert!(matches!(
            build_from_permutations(&[], 10),
            Err(GroupError::EmptyGeneratorList)
        ));
        let s4 = [p(4, "(1 2 3 4)"), p(4, "(1 2)")];
        assert!(matches!(
            build_from_permutations(&s4, 10),
            Err(GroupError::ClosureExceedsCap(10))
        ));
    }

    #[test]
    fn s3_commutator_example() {
        let gens = [p(3, "(1 2)"), p(3, "(1 3)")];
        let (g, elems) = build_from_permutations(&gens, 10).unwrap();
        let find = |q: &Permutation| elems.iter().position(|e| e == q).unwrap();
        let c = g.commutator(find(&gens[0]), find(&gens[1]));
        assert_eq!(elems[c].to_string(), "(1 2 3)");
    }
}
