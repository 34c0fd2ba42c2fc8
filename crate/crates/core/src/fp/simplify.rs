//! Tietze elimination through short relators.
//!
//! A relator `g` kills a generator and a relator `a b` over two different
//! generators expresses one of them through the other. Both are removed by
//! substitution, repeatedly, until no relator of length one or two over
//! distinct generators remains. The resulting presentation defines the same
//! group; the substitution maps every original generator to a letter of the
//! reduced presentation or to the identity.

use super::presentation::Presentation;
use super::word::{canonical_relator, Letter, Word};

/// What an original generator became.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Image {
    Identity,
    Letter(Letter),
}

#[derive(Clone, Debug)]
pub struct Simplified {
    pub presentation: Presentation,
    /// Indexed by original generator.
    pub images: Vec<Image>,
}

impl Simplified {
    /// Rewrites a word over the original generators.
    pub fn rewrite(&self, w: &[Letter]) -> Word {
        w.iter()
            .filter_map(|l| match self.images[l.generator()] {
                Image::Identity => None,
                Image::Letter(x) => Some(if l.is_inverse() { x.inverse() } else { x }),
            })
            .collect()
    }
}

#[derive(Clone, Copy)]
enum Subst {
    Keep,
    Identity,
    Letter(Letter),
}

fn resolve(subst: &mut [Subst], l: Letter) -> Option<Letter> {
    let out = match subst[l.generator()] {
        Subst::Keep => return Some(l),
        Subst::Identity => None,
        Subst::Letter(x) => {
            let r = resolve(subst, x);
            subst[l.generator()] = match r {
                None => Subst::Identity,
                Some(y) => Subst::Letter(y),
            };
            r
        }
    };
    if l.is_inverse() {
        out.map(Letter::inverse)
    } else {
        out
    }
}

pub fn simplify(p: &Presentation) -> Simplified {
    let n = p.num_generators;
    let mut subst = vec![Subst::Keep; n];
    let mut relators: Vec<Word> = p.relators.clone();
    loop {
        let mut changed = false;
        let mut next = Vec::with_capacity(relators.len());
        for r in &relators {
            let rewritten: Word = r.iter().filter_map(|&l| resolve(&mut subst, l)).collect();
            let c = canonical_relator(&rewritten);
            match c.len() {
                0 => {}
                1 => {
                    subst[c[0].generator()] = Subst::Identity;
                    changed = true;
                }
                2 if c[0].generator() != c[1].generator() => {
                    // a b = 1, so the later generator is expressed through the
                    // earlier one.
                    let (a, b) = (c[0], c[1]);
                    let (keep, drop) = if a.generator() < b.generator() { (a, b) } else { (b, a) };
                    // drop = keep⁻¹
                    let target = keep.inverse();
                    let image = if drop.is_inverse() { target.inverse() } else { target };
                    subst[drop.generator()] = Subst::Letter(image);
                    changed = true;
                }
                _ => next.push(c),
            }
        }
        relators = next;
        if !changed {
            break;
        }
    }

    let mut new_index = vec![usize::MAX; n];
    let mut count = 0;
    for g in 0..n {
        if matches!(subst[g], Subst::Keep) {
            new_index[g] = count;
            count += 1;
        }
    }
    let renumber = |l: Letter| {
        let g = new_index[l.generator()];
        if l.is_inverse() {
            Letter::gen_inv(g)
        } else {
            Letter::gen(g)
        }
    };
    let images = (0..n)
        .map(|g| match resolve(&mut subst, Letter::gen(g)) {
            None => Image::Identity,
            Some(l) => Image::Letter(renumber(l)),
        })
        .collect();
    let relators = relators
        .iter()
        .map(|r| r.iter().map(|&l| renumber(l)).collect())
        .collect();
    let presentation = Presentation {
        label: format!("{} (simplified)", p.label),
        num_generators: count,
        relators,
    }
    .preprocessed();
    Simplified { presentation, images }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[i64]) -> Word {
        s.iter().map(|&x| Letter::from_signed(x).unwrap()).collect()
    }

    #[test]
    fn eliminates_chains() {
        // x1 = x2^-1, x3 = 1, x2^5 = 1
        let p = Presentation::new("p", 3, vec![w(&[1, 2]), w(&[3]), w(&[2, 2, 2, 2, 2]), w(&[1, 3, -1])]).unwrap();
        let s = simplify(&p);
        assert_eq!(s.presentation.num_generators, 1);
        assert_eq!(s.presentation.relators, vec![w(&[1, 1, 1, 1, 1])]);
        assert_eq!(s.images[0], Image::Letter(Letter::gen(0)));
        assert_eq!(s.images[1], Image::Letter(Letter::gen_inv(0)));
        assert_eq!(s.images[2], Image::Identity);
    }

    #[test]
    fn keeps_squares() {
        let p = Presentation::new("p", 1, vec![w(&[1, 1])]).unwrap();
        let s = simplify(&p);
        assert_eq!(s.presentation.num_generators, 1);
        assert_eq!(s.presentation.relators.len(), 1);
    }
}
