use crate::group::{Elem, FiniteGroup};

use super::coset::{todd_coxeter, CosetTable, EnumerationConfig};
use super::presentation::Presentation;
use super::simplify::{simplify, Image};
use super::word::{Letter, Word};
use super::FpError;

/// A finite group together with the images of the presentation generators.
#[derive(Clone, Debug)]
pub struct Realization {
    pub group: FiniteGroup,
    /// Indexed by presentation generator.
    pub gen_images: Vec<Elem>,
}

impl Realization {
    /// Product of the generator images along `w`.
    pub fn evaluate_word(&self, w: &[Letter]) -> Elem {
        w.iter().fold(self.group.identity(), |acc, &l| {
            let g = self.gen_images[l.generator()];
            let x = if l.is_inverse() { self.group.inv(g) } else { g };
            self.group.mul(acc, x)
        })
    }

    pub fn satisfies(&self, relators: &[Word]) -> bool {
        relators.iter().all(|r| self.evaluate_word(r) == 0)
    }

    /// Distinct non-identity generator images, ascending.
    pub fn distinct_generator_images(&self) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.gen_images.iter().copied().filter(|&x| x != 0).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// The group acting regularly on the cosets of the trivial subgroup.
///
/// Coset `c` is identified with the element `w_c` reaching it from coset 0;
/// then `w_a w_b` is the coset reached by tracing `w_b` from `a`, which gives
/// the Cayley table in `O(n^2)` lookups along a spanning tree.
pub fn realize(p: &Presentation, table: &CosetTable) -> Result<Realization, FpError> {
    if !table.is_closed() {
        return Err(FpError::TableNotClosed);
    }
    if table.num_generators() != p.num_generators {
        return Err(FpError::Internal(
            "table and presentation disagree on generators".into(),
        ));
    }
    let n = table.num_cosets();
    // Spanning tree: parent coset and the letter leading to each coset.
    let mut via: Vec<Option<(usize, Letter)>> = vec![None; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        i += 1;
        for col in 0..2 * p.num_generators {
            let l = Letter::from_column(col);
            let d = table.act(c, l).expect("closed");
            if !seen[d] {
                seen[d] = true;
                via[d] = Some((c, l));
                order.push(d);
            }
        }
    }
    if order.len() != n {
        return Err(FpError::Internal("coset graph is disconnected".into()));
    }
    let mut mul = vec![0; n * n];
    for a in 0..n {
        mul[a * n] = a;
    }
    for &b in order.iter().skip(1) {
        let (parent, l) = via[b].unwrap();
        for a in 0..n {
            mul[a * n + b] = table.act(mul[a * n + parent], l).unwrap();
        }
    }
    let group = FiniteGroup::from_raw(p.label.clone(), n, mul, None)
        .map_err(|e| FpError::Internal(format!("realized table is not a group: {e}")))?;
    let gen_images = (0..p.num_generators)
        .map(|g| table.act(0, Letter::gen(g)).unwrap())
        .collect();
    Ok(Realization { group, gen_images })
}

/// Enumerates the whole presented group and realizes it, optionally after
/// Tietze simplification. Generator images always refer to `p`'s generators.
pub fn enumerate_group(p: &Presentation, config: &EnumerationConfig) -> Result<Realization, FpError> {
    if !config.simplify {
        let table = todd_coxeter(p, &[], config)?;
        return realize(p, &table);
    }
    let s = simplify(p);
    let table = todd_coxeter(&s.presentation, &[], config)?;
    let reduced = realize(&s.presentation, &table)?;
    let gen_images = s
        .images
        .iter()
        .map(|img| match img {
            Image::Identity => 0,
            Image::Letter(l) => reduced.evaluate_word(&[*l]),
        })
        .collect();
    let realization = Realization {
        group: reduced.group.with_label(p.label.clone()),
        gen_images,
    };
    debug_assert!(realization.satisfies(&p.relators));
    Ok(realization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::coset::Strategy;

    fn w(s: &[i64]) -> Word {
        s.iter().map(|&x| Letter::from_signed(x).unwrap()).collect()
    }

    fn pres(n: usize, rels: &[&[i64]]) -> Presentation {
        Presentation::new("t", n, rels.iter().map(|r| w(r)).collect()).unwrap()
    }

    #[test]
    fn cyclic_three() {
        let p = pres(1, &[&[1, 1, 1]]);
        let t = todd_coxeter(&p, &[], &EnumerationConfig::default()).unwrap();
        let r = realize(&p, &t).unwrap();
        assert_eq!(r.group.order(), 3);
        assert_eq!(r.group.element_order(r.gen_images[0]), 3);
    }

    #[test]
    fn s3_relators_evaluate_to_identity() {
        let p = pres(2, &[&[1, 1], &[2, 2], &[1, 2, 1, 2, 1, 2]]);
        let r = enumerate_group(&p, &EnumerationConfig::default()).unwrap();
        assert_eq!(r.group.order(), 6);
        assert!(r.group.is_associative_exhaustive());
        assert_eq!(r.evaluate_word(&w(&[1, 2, 1, 2, 1, 2])), 0);
        assert_eq!(r.evaluate_word(&[]), 0);
        assert_eq!(r.evaluate_word(&w(&[2, -2])), 0);
    }

    #[test]
    fn trivial_group() {
        let p = pres(1, &[&[1]]);
        for simplify in [false, true] {
            let r = enumerate_group(&p, &EnumerationConfig::default().with_simplify(simplify)).unwrap();
            assert_eq!(r.group.order(), 1);
        }
    }

    #[test]
    fn not_closed_is_rejected() {
        let p = pres(1, &[&[1, 1, 1]]);
        // Table of a different presentation with fewer generators.
        let q = pres(0, &[]);
        let t = todd_coxeter(&q, &[], &EnumerationConfig::default()).unwrap();
        assert!(realize(&p, &t).is_err());
    }

    #[test]
    fn simplified_and_plain_agree() {
        // x2 = x1^-1 and x3 = 1, so (x2 x3)^2 leaves x1^2 = 1.
        let p = pres(3, &[&[1, 2], &[3], &[1, 1, 1, 1], &[2, 3, 2, 3]]);
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            let cfg = EnumerationConfig::default().with_strategy(strategy);
            let a = enumerate_group(&p, &cfg.clone().with_simplify(false)).unwrap();
            let b = enumerate_group(&p, &cfg.with_simplify(true)).unwrap();
            assert_eq!(a.group.order(), 2);
            assert_eq!(b.group.order(), 2);
            assert!(b.satisfies(&p.relators));
        }
    }
}
