use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::{Elem, FiniteGroup, GroupHom};
use crate::wedge::{check_pairing, pairing_to_hom, PairingTable, WedgeError, WedgeRealization, WedgeVariant};

use super::{verify_witness_data, CentralData, IsoclinismError, IsoclinismWitness};

/// `γ: G₁⋏G₁ → G₂⋏G₂` induced by a witness, and its restriction `γ̃` to the
/// kernels of `κ`.
#[derive(Clone, Debug)]
pub struct GammaMap {
    pub witness: IsoclinismWitness,
    pub gamma: GroupHom,
    /// `ker κ₁` and `ker κ₂` as standalone groups.
    pub kernels: [FiniteGroup; 2],
    pub gamma_tilde: GroupHom,
}

/// `φ(a₁, b₁) = a₂ ⋏ b₂` with `a₂, b₂` read off `section2` through `α`.
fn induced_pairing(
    d1: &CentralData,
    w: &IsoclinismWitness,
    section2: &[Elem],
    wedge2: &WedgeRealization,
) -> PairingTable {
    PairingTable::from_fn(&d1.group, |a, b| {
        let a2 = section2[w.alpha[d1.coset(a)]];
        let b2 = section2[w.alpha[d1.coset(b)]];
        wedge2.pair_image(a2, b2)
    })
}

fn same_group(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.order() == b.order() && a.elements().all(|x| a.row(x) == b.row(x))
}

fn check_wedges(
    d1: &CentralData,
    d2: &CentralData,
    wedge1: &WedgeRealization,
    wedge2: &WedgeRealization,
) -> Result<(), IsoclinismError> {
    for (d, wg) in [(d1, wedge1), (d2, wedge2)] {
        if wg.variant != WedgeVariant::Curly || !same_group(&d.group, &wg.base) {
            return Err(IsoclinismError::WrongWedge);
        }
    }
    Ok(())
}

fn gamma_for_section(
    d1: &CentralData,
    w: &IsoclinismWitness,
    section2: &[Elem],
    wedge1: &WedgeRealization,
    wedge2: &WedgeRealization,
) -> Result<GroupHom, IsoclinismError> {
    let phi = induced_pairing(d1, w, section2, wedge2);
    if !check_pairing(&d1.group, wedge2.group(), &phi) {
        return Err(IsoclinismError::PairingAxiomFailed);
    }
    pairing_to_hom(&d1.group, wedge2.group(), &phi, wedge1).map_err(|e| match e {
        WedgeError::NotAPairing => IsoclinismError::PairingAxiomFailed,
        other => other.into(),
    })
}

/// Builds `γ` from the pairing `(a₁, b₁) ↦ a₂ ⋏ b₂`, then checks that it is
/// bijective, that `β∘κ₁ = κ₂∘γ` everywhere, and that it restricts to a
/// bijection `γ̃: ker κ₁ → ker κ₂`.
pub fn build_gamma(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    w: &IsoclinismWitness,
    wedge1: &WedgeRealization,
    wedge2: &WedgeRealization,
) -> Result<GammaMap, IsoclinismError> {
    let (d1, d2) = (CentralData::new(g1), CentralData::new(g2));
    if !verify_witness_data(&d1, &d2, w) {
        return Err(IsoclinismError::WitnessInvalid);
    }
    check_wedges(&d1, &d2, wedge1, wedge2)?;
    let gamma = gamma_for_section(&d1, w, &w.sections[1], wedge1, wedge2)?;
    let (w1, w2) = (wedge1.group(), wedge2.group());
    if w1.order() != w2.order() || !gamma.is_bijective(w2.order()) {
        return Err(IsoclinismError::GammaNotBijective);
    }

    let beta = w.beta_on_elements(&d1, &d2);
    for x in w1.elements() {
        let lhs = beta[wedge1.kappa.apply(x)];
        if lhs != Some(wedge2.kappa.apply(gamma.apply(x))) {
            return Err(IsoclinismError::DiagramFails(x));
        }
    }

    let (k1, emb1) = wedge1.kernel.to_group(w1, "ker κ₁");
    let (k2, _) = wedge2.kernel.to_group(w2, "ker κ₂");
    let members2 = wedge2.kernel.members();
    let images: Option<Vec<Elem>> = emb1
        .images()
        .iter()
        .map(|&x| members2.binary_search(&gamma.apply(x)).ok())
        .collect();
    let gamma_tilde = GroupHom::from_images(images.ok_or(IsoclinismError::KernelMismatch)?);
    if k1.order() != k2.order() || !gamma_tilde.is_isomorphism(&k1, &k2) {
        return Err(IsoclinismError::KernelMismatch);
    }
    Ok(GammaMap {
        witness: w.clone(),
        gamma,
        kernels: [k1, k2],
        gamma_tilde,
    })
}

/// Rebuilds `γ` from `trials` random sections of `G₂/Z₂` (each representative
/// moved by a random central element) and compares with the section in the
/// witness. Deterministic for a given seed.
pub fn well_definedness_fuzz(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    w: &IsoclinismWitness,
    wedge1: &WedgeRealization,
    wedge2: &WedgeRealization,
    trials: usize,
    seed: u64,
) -> Result<bool, IsoclinismError> {
    let (d1, d2) = (CentralData::new(g1), CentralData::new(g2));
    if !verify_witness_data(&d1, &d2, w) {
        return Err(IsoclinismError::WitnessInvalid);
    }
    check_wedges(&d1, &d2, wedge1, wedge2)?;
    let reference = gamma_for_section(&d1, w, &w.sections[1], wedge1, wedge2)?;
    let z2 = d2.center.members();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let section: Vec<Elem> = w.sections[1]
            .iter()
            .map(|&s| g2.mul(s, z2[rng.gen_range(0..z2.len())]))
            .collect();
        if gamma_for_section(&d1, w, &section, wedge1, wedge2)? != reference {
            return Ok(false);
        }
    }
    Ok(true)
}
