//! The curly-wedge square `G ⋏ G`, Miller's exterior square `G ∧ G`, the
//! commutator map `κ` and its kernel.
//!
//! `κ(m ⋏ n) = [m, n]` maps either square onto `[G, G]`. On the curly square
//! the kernel is the Bogomolov kernel `B̃₀(G)`; on the exterior square it is
//! the Schur multiplier.

mod pairing;
mod presentation;

use thiserror::Error;

use crate::fp::{enumerate_group, EnumerationConfig, FpError, Letter, Realization};
use crate::group::{
    abelian_invariants, derived_subgroup, extend_from_generators, AbelianInvariants, Elem, FiniteGroup, GroupHom,
    Subgroup,
};

pub use pairing::{check_pairing, pairing_to_hom, PairingTable};
pub use presentation::{build_wedge_presentation, RelatorCounts, WedgePresentation, WedgeVariant};

pub const DEFAULT_CURLY_CAP: usize = 64;
pub const DEFAULT_EXTERIOR_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WedgeError {
    #[error("group of order {order} exceeds the wedge cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error(transparent)]
    Enumeration(#[from] FpError),
    #[error("commutator map violates a relator: {0}")]
    KappaRelatorViolation(String),
    #[error("map is not a B̃₀-pairing")]
    NotAPairing,
    #[error("pairing does not kill relator {0}")]
    RelatorNotKilled(usize),
    #[error("pairings induce maps only from the curly square")]
    NotCurly,
    #[error("internal wedge error: {0}")]
    Internal(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeConfig {
    pub enumeration: EnumerationConfig,
    pub curly_cap: usize,
    pub exterior_cap: usize,
}

impl Default for WedgeConfig {
    fn default() -> Self {
        WedgeConfig {
            enumeration: EnumerationConfig::default(),
            curly_cap: DEFAULT_CURLY_CAP,
            exterior_cap: DEFAULT_EXTERIOR_CAP,
        }
    }
}

impl WedgeConfig {
    pub fn cap(&self, variant: WedgeVariant) -> usize {
        match variant {
            WedgeVariant::Curly => self.curly_cap,
            WedgeVariant::Exterior => self.exterior_cap,
        }
    }
}

/// A finite model of `G ⋏ G` or `G ∧ G` with `κ` and `ker κ`.
#[derive(Clone, Debug)]
pub struct WedgeRealization {
    pub variant: WedgeVariant,
    pub base: FiniteGroup,
    pub presentation: WedgePresentation,
    pub realization: Realization,
    /// Realized group to `base`; its image is `[G, G]`.
    pub kappa: GroupHom,
    pub kernel: Subgroup,
    pub derived: Subgroup,
}

impl WedgeRealization {
    pub fn group(&self) -> &FiniteGroup {
        &self.realization.group
    }

    pub fn order(&self) -> usize {
        self.realization.group.order()
    }

    /// Realized element of the symbol `m ⋏ n`.
    pub fn pair_image(&self, m: Elem, n: Elem) -> Elem {
        self.realization.gen_images[self.presentation.pair_gen(m, n)]
    }

    pub fn kernel_invariants(&self) -> AbelianInvariants {
        abelian_invariants(self.group(), Some(self.kernel.members()), false).expect("no abelian assertion requested")
    }

    /// `|G ⋏ G| = |ker κ| · |[G, G]|`.
    pub fn is_exact(&self) -> bool {
        self.order() == self.kernel.order() * self.derived.order()
    }

    /// Traces every relator through `m ⋏ n ↦ [m, n]` in the base group and
    /// returns the index of the first one that does not give the identity.
    pub fn kappa_relator_violation(&self) -> Option<usize> {
        first_kappa_violation(&self.base, &self.presentation)
    }
}

fn first_kappa_violation(g: &FiniteGroup, wp: &WedgePresentation) -> Option<usize> {
    let letter_value = |l: Letter| {
        let (m, n) = wp.pair_of(l.generator());
        let c = g.commutator(m, n);
        if l.is_inverse() {
            g.inv(c)
        } else {
            c
        }
    };
    wp.presentation
        .relators
        .iter()
        .position(|r| r.iter().fold(0, |acc, &l| g.mul(acc, letter_value(l))) != 0)
}

pub fn compute_wedge(
    g: &FiniteGroup,
    variant: WedgeVariant,
    config: &WedgeConfig,
) -> Result<WedgeRealization, WedgeError> {
    let wp = build_wedge_presentation(g, variant, config.cap(variant))?;
    if let Some(i) = first_kappa_violation(g, &wp) {
        return Err(WedgeError::KappaRelatorViolation(format!(
            "relator {i} of {}",
            wp.presentation.label
        )));
    }
    let realization = enumerate_group(&wp.presentation, &config.enumeration)?;

    // κ on distinct generator images, then extended along the Cayley graph.
    let mut assigned: Vec<Option<Elem>> = vec![None; realization.group.order()];
    assigned[0] = Some(0);
    for m in g.elements() {
        for n in g.elements() {
            let x = realization.gen_images[wp.pair_gen(m, n)];
            let c = g.commutator(m, n);
            match assigned[x] {
                None => assigned[x] = Some(c),
                Some(prev) if prev != c => {
                    return Err(WedgeError::KappaRelatorViolation(format!(
                        "symbol {m}{}{n} realized as an element already sent to {prev}",
                        variant.symbol()
                    )))
                }
                _ => {}
            }
        }
    }
    let gens = realization.distinct_generator_images();
    let images: Vec<Elem> = gens.iter().map(|&x| assigned[x].unwrap()).collect();
    let kappa = extend_from_generators(&realization.group, g, &gens, &images)
        .ok_or_else(|| WedgeError::KappaRelatorViolation("commutator assignment does not extend".into()))?;
    let derived = derived_subgroup(g);
    if kappa.image_set() != derived.members() {
        return Err(WedgeError::Internal("κ is not onto the derived subgroup".into()));
    }
    let kernel = kappa.kernel(&realization.group);
    let w = WedgeRealization {
        variant,
        base: g.clone(),
        presentation: wp,
        realization,
        kappa,
        kernel,
        derived,
    };
    if !w.is_exact() {
        return Err(WedgeError::Internal("|G⋏G| ≠ |ker κ|·|[G,G]|".into()));
    }
    if !w.kernel.is_abelian(w.group()) {
        return Err(WedgeError::Internal("ker κ is not abelian".into()));
    }
    Ok(w)
}

/// Abelian invariants of `B̃₀(G) = ker(κ: G ⋏ G → [G, G])`.
pub fn bogomolov_kernel(g: &FiniteGroup, config: &WedgeConfig) -> Result<AbelianInvariants, WedgeError> {
    Ok(compute_wedge(g, WedgeVariant::Curly, config)?.kernel_invariants())
}

/// `|ker(κ: G ∧ G → [G, G])|`, the order of the Schur multiplier.
pub fn multiplier_order(g: &FiniteGroup, config: &WedgeConfig) -> Result<usize, WedgeError> {
    Ok(compute_wedge(g, WedgeVariant::Exterior, config)?.kernel.order())
}
