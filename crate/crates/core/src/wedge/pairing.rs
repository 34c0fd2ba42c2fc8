use crate::group::{extend_from_generators, Elem, FiniteGroup, GroupHom};

use super::{WedgeError, WedgeRealization, WedgeVariant};

/// A function `G × G → L` stored as a table; entry `m * |G| + n` is `φ(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingTable {
    base_order: usize,
    values: Vec<Elem>,
}

impl PairingTable {
    pub fn from_fn(g: &FiniteGroup, f: impl Fn(Elem, Elem) -> Elem) -> Self {
        let n = g.order();
        let values = (0..n * n).map(|i| f(i / n, i % n)).collect();
        PairingTable { base_order: n, values }
    }

    #[inline]
    pub fn get(&self, m: Elem, n: Elem) -> Elem {
        self.values[m * self.base_order + n]
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }
}

/// Exhaustively checks the three B̃₀-pairing axioms:
///
/// - `φ(m m', n) = φ(^m m', ^m n) φ(m, n)`
/// - `φ(m, n n') = φ(m, n) φ(^n m, ^n n')`
/// - `φ(x, y) = 1` whenever `[x, y] = 1`.
pub fn check_pairing(g: &FiniteGroup, l: &FiniteGroup, phi: &PairingTable) -> bool {
    if phi.base_order != g.order() || phi.values.iter().any(|&v| v >= l.order()) {
        return false;
    }
    for x in g.elements() {
        for y in g.elements() {
            if g.mul(x, y) == g.mul(y, x) && phi.get(x, y) != 0 {
                return false;
            }
        }
    }
    for m in g.elements() {
        for a in g.elements() {
            for b in g.elements() {
                // a plays m' (resp. n) and b plays n (resp. n') below.
                let left = phi.get(g.mul(m, a), b);
                let right = l.mul(phi.get(g.conj(m, a), g.conj(m, b)), phi.get(m, b));
                if left != right {
                    return false;
                }
                let left = phi.get(m, g.mul(a, b));
                let right = l.mul(phi.get(m, a), phi.get(g.conj(a, m), g.conj(a, b)));
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// The homomorphism `φ*: G ⋏ G → L` with `φ*(m ⋏ n) = φ(m, n)`.
pub fn pairing_to_hom(
    g: &FiniteGroup,
    l: &FiniteGroup,
    phi: &PairingTable,
    wedge: &WedgeRealization,
) -> Result<GroupHom, WedgeError> {
    if wedge.variant != WedgeVariant::Curly {
        return Err(WedgeError::NotCurly);
    }
    if wedge.base.order() != g.order() || !check_pairing(g, l, phi) {
        return Err(WedgeError::NotAPairing);
    }
    let wp = &wedge.presentation;
    for (i, r) in wp.presentation.relators.iter().enumerate() {
        let value = r.iter().fold(0, |acc, &letter| {
            let (m, n) = wp.pair_of(letter.generator());
            let v = phi.get(m, n);
            l.mul(acc, if letter.is_inverse() { l.inv(v) } else { v })
        });
        if value != 0 {
            return Err(WedgeError::RelatorNotKilled(i));
        }
    }
    let source = wedge.group();
    let mut assigned: Vec<Option<Elem>> = vec![None; source.order()];
    assigned[0] = Some(0);
    for m in g.elements() {
        for n in g.elements() {
            let x = wedge.pair_image(m, n);
            match assigned[x] {
                None => assigned[x] = Some(phi.get(m, n)),
                Some(prev) if prev != phi.get(m, n) => {
                    return Err(WedgeError::Internal(
                        "pairing separates symbols the realization identifies".into(),
                    ))
                }
                _ => {}
            }
        }
    }
    let gens = wedge.realization.distinct_generator_images();
    let images: Vec<Elem> = gens.iter().map(|&x| assigned[x].unwrap()).collect();
    extend_from_generators(source, l, &gens, &images)
        .ok_or_else(|| WedgeError::Internal("pairing values do not extend to a homomorphism".into()))
}
