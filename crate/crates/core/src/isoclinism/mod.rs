//! Isoclinism: isomorphisms `α: G₁/Z₁ → G₂/Z₂` and `β: [G₁,G₁] → [G₂,G₂]`
//! with `β([a₁, b₁]) = [a₂, b₂]` whenever `α(a₁Z₁) = a₂Z₂` and `α(b₁Z₁) = b₂Z₂`.

mod families;
mod gamma;

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{
    center, derived_subgroup, for_each_isomorphism, quotient, Elem, FiniteGroup, GroupHom, Quotient, Subgroup,
};
use crate::wedge::WedgeError;

pub use families::{partition_into_families, Families, FamilyKey};
pub use gamma::{build_gamma, well_definedness_fuzz, GammaMap};

pub const WITNESS_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoclinismError {
    #[error("witness does not verify")]
    WitnessInvalid,
    #[error("wedge realization is not the curly square of the witnessed group")]
    WrongWedge,
    #[error("induced map is not a B̃₀-pairing")]
    PairingAxiomFailed,
    #[error("γ is not bijective")]
    GammaNotBijective,
    #[error("β∘κ₁ ≠ κ₂∘γ at element {0}")]
    DiagramFails(Elem),
    #[error("γ does not restrict to a bijection of the kernels")]
    KernelMismatch,
    #[error(transparent)]
    Wedge(#[from] WedgeError),
}

/// Center, central quotient and derived subgroup of one group.
#[derive(Clone, Debug)]
pub struct CentralData {
    pub group: FiniteGroup,
    pub center: Subgroup,
    pub quotient: Quotient,
    pub derived: Subgroup,
    /// Position of each element of the derived subgroup in `derived.members()`.
    derived_index: Vec<Option<usize>>,
}

impl CentralData {
    pub fn new(g: &FiniteGroup) -> Self {
        let center = center(g);
        let quotient = quotient(g, &center).expect("the center is normal");
        let derived = derived_subgroup(g);
        let mut derived_index = vec![None; g.order()];
        for (i, &x) in derived.members().iter().enumerate() {
            derived_index[x] = Some(i);
        }
        CentralData {
            group: g.clone(),
            center,
            quotient,
            derived,
            derived_index,
        }
    }

    pub fn quotient_order(&self) -> usize {
        self.quotient.group.order()
    }

    /// Coset of `x` in `G/Z`.
    pub fn coset(&self, x: Elem) -> usize {
        self.quotient.projection.apply(x)
    }

    /// Elements of the coset with index `c`.
    pub fn coset_members(&self, c: usize) -> impl Iterator<Item = Elem> + '_ {
        let s = self.quotient.section[c];
        self.center.members().iter().map(move |&z| self.group.mul(s, z))
    }
}

/// `(α, β)` and the coset representatives used to evaluate it.
///
/// `alpha[c]` is the image of coset `c` of `G₁/Z₁` (cosets numbered by their
/// smallest element), `beta[i]` the position in `[G₂,G₂]` of the image of the
/// `i`-th element of `[G₁,G₁]` (both in ascending element order), and
/// `sections` the representatives per coset on each side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsoclinismWitness {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub sections: [Vec<Elem>; 2],
}

impl IsoclinismWitness {
    /// `β` as a map on elements of `G₁` (`None` outside `[G₁,G₁]`).
    pub fn beta_on_elements(&self, d1: &CentralData, d2: &CentralData) -> Vec<Option<Elem>> {
        let mut out = vec![None; d1.group.order()];
        for (i, &x) in d1.derived.members().iter().enumerate() {
            out[x] = self.beta.get(i).and_then(|&j| d2.derived.members().get(j).copied());
        }
        out
    }

    /// Representative in `G₂` of `α(x Z₁)` given by the section.
    pub fn partner(&self, d1: &CentralData, x: Elem) -> Elem {
        self.sections[1][self.alpha[d1.coset(x)]]
    }
}

fn compatible_beta(d1: &CentralData, d2: &CentralData, alpha: &[usize]) -> Option<Vec<usize>> {
    let (g1, g2) = (&d1.group, &d2.group);
    let s1 = &d1.quotient.section;
    let s2 = &d2.quotient.section;
    // β on commutators; [a, b] depends only on the cosets of a and b.
    let mut on: Vec<Option<Elem>> = vec![None; g1.order()];
    on[0] = Some(0);
    let mut commutators = Vec::new();
    for a in 0..s1.len() {
        for b in 0..s1.len() {
            let c1 = g1.commutator(s1[a], s1[b]);
            let c2 = g2.commutator(s2[alpha[a]], s2[alpha[b]]);
            match on[c1] {
                None => {
                    on[c1] = Some(c2);
                    commutators.push(c1);
                }
                Some(prev) if prev != c2 => return None,
                _ => {}
            }
        }
    }
    // Extend along right multiplication by commutators, checking consistency.
    let mut queue = vec![0];
    let mut seen = vec![false; g1.order()];
    seen[0] = true;
    while let Some(x) = queue.pop() {
        let bx = on[x].unwrap();
        for &c in &commutators {
            let y = g1.mul(x, c);
            let by = g2.mul(bx, on[c].unwrap());
            match on[y] {
                Some(prev) if prev != by => return None,
                _ => on[y] = Some(by),
            }
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    let members1 = d1.derived.members();
    let mut beta = Vec::with_capacity(members1.len());
    let mut hit = vec![false; members1.len()];
    for &x in members1 {
        let j = d2.derived_index[on[x]?]?;
        if std::mem::replace(&mut hit[j], true) {
            return None;
        }
        beta.push(j);
    }
    for &x in members1 {
        for &y in members1 {
            if on[g1.mul(x, y)]? != g2.mul(on[x]?, on[y]?) {
                return None;
            }
        }
    }
    Some(beta)
}

/// First witness in the search order over isomorphisms of the central
/// quotients, with `β` derived from `α`.
pub fn are_isoclinic(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<IsoclinismWitness> {
    are_isoclinic_data(&CentralData::new(g1), &CentralData::new(g2))
}

pub fn are_isoclinic_data(d1: &CentralData, d2: &CentralData) -> Option<IsoclinismWitness> {
    if d1.quotient_order() != d2.quotient_order() || d1.derived.order() != d2.derived.order() {
        return None;
    }
    let mut found = None;
    for_each_isomorphism(&d1.quotient.group, &d2.quotient.group, |alpha| {
        match compatible_beta(d1, d2, alpha.images()) {
            Some(beta) => {
                found = Some(IsoclinismWitness {
                    alpha: alpha.images().to_vec(),
                    beta,
                    sections: [d1.quotient.section.clone(), d2.quotient.section.clone()],
                });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    found
}

/// Checks both isomorphisms, the sections, and compatibility for all `a₁, b₁`
/// and every choice of `a₂ ∈ α(a₁Z₁)`, `b₂ ∈ α(b₁Z₁)`.
pub fn verify_witness(g1: &FiniteGroup, g2: &FiniteGroup, w: &IsoclinismWitness) -> bool {
    verify_witness_data(&CentralData::new(g1), &CentralData::new(g2), w)
}

pub fn verify_witness_data(d1: &CentralData, d2: &CentralData, w: &IsoclinismWitness) -> bool {
    let (q1, q2) = (&d1.quotient.group, &d2.quotient.group);
    if w.alpha.len() != q1.order()
        || q1.order() != q2.order()
        || w.alpha.iter().any(|&c| c >= q2.order())
        || !GroupHom::from_images(w.alpha.clone()).is_isomorphism(q1, q2)
    {
        return false;
    }
    for (side, d) in [d1, d2].into_iter().enumerate() {
        let s = &w.sections[side];
        if s.len() != d.quotient_order()
            || s.iter()
                .enumerate()
                .any(|(c, &x)| x >= d.group.order() || d.coset(x) != c)
        {
            return false;
        }
    }
    let n1 = d1.derived.order();
    if w.beta.len() != n1 || n1 != d2.derived.order() || w.beta.iter().any(|&j| j >= n1) {
        return false;
    }
    let beta = w.beta_on_elements(d1, d2);
    let mut hit = vec![false; n1];
    for &j in &w.beta {
        if std::mem::replace(&mut hit[j], true) {
            return false;
        }
    }
    let (g1, g2) = (&d1.group, &d2.group);
    for &x in d1.derived.members() {
        for &y in d1.derived.members() {
            if beta[g1.mul(x, y)] != Some(g2.mul(beta[x].unwrap(), beta[y].unwrap())) {
                return false;
            }
        }
    }
    for a1 in g1.elements() {
        let ca = w.alpha[d1.coset(a1)];
        for b1 in g1.elements() {
            let cb = w.alpha[d1.coset(b1)];
            let expected = beta[g1.commutator(a1, b1)];
            for a2 in d2.coset_members(ca) {
                for b2 in d2.coset_members(cb) {
                    if expected != Some(g2.commutator(a2, b2)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `(id, id)` on `G`.
pub fn identity_witness(g: &FiniteGroup) -> IsoclinismWitness {
    let d = CentralData::new(g);
    IsoclinismWitness {
        alpha: (0..d.quotient_order()).collect(),
        beta: (0..d.derived.order()).collect(),
        sections: [d.quotient.section.clone(), d.quotient.section.clone()],
    }
}

/// `(α⁻¹, β⁻¹)`, a witness for `(G₂, G₁)`.
pub fn invert_witness(w: &IsoclinismWitness) -> IsoclinismWitness {
    IsoclinismWitness {
        alpha: invert_permutation(&w.alpha),
        beta: invert_permutation(&w.beta),
        sections: [w.sections[1].clone(), w.sections[0].clone()],
    }
}

/// `(α₂₃ ∘ α₁₂, β₂₃ ∘ β₁₂)`, a witness for `(G₁, G₃)`.
pub fn compose_witnesses(w12: &IsoclinismWitness, w23: &IsoclinismWitness) -> IsoclinismWitness {
    IsoclinismWitness {
        alpha: w12.alpha.iter().map(|&c| w23.alpha[c]).collect(),
        beta: w12.beta.iter().map(|&j| w23.beta[j]).collect(),
        sections: [w12.sections[0].clone(), w23.sections[1].clone()],
    }
}

fn invert_permutation(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Witness together with the schema version, as written to disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub schema_version: u32,
    pub groups: [String; 2],
    #[serde(flatten)]
    pub witness: IsoclinismWitness,
}

/// Cheap isoclinism invariants: `|G/Z|`, `|G'|` and element-order censuses
/// of both.
pub(crate) fn census_key(d: &CentralData) -> (usize, usize, BTreeMap<usize, usize>, BTreeMap<usize, usize>) {
    let (dg, _) = d.derived.to_group(&d.group, "G'");
    (
        d.quotient_order(),
        d.derived.order(),
        d.quotient.group.order_census(),
        dg.order_census(),
    )
}
