//! Finite groups as Cayley tables and the structural routines built on them.
//!
//! Conventions used across the crate:
//! - elements are dense indices `0..order` with `0` the identity;
//! - permutations compose right-to-left (the rightmost factor acts first);
//! - `[x, y] = x y x⁻¹ y⁻¹` and `^x y = x y x⁻¹`.

mod hom;
mod invariants;
mod iso;
mod perm;
mod subgroup;
mod table;

use thiserror::Error;

pub use hom::{extend_from_generators, GroupHom};
pub use invariants::{abelian_invariants, AbelianInvariants};
pub use iso::{find_isomorphism, for_each_isomorphism};
pub use perm::{build_from_permutations, Permutation};
pub use subgroup::{
    abelian_subgroups, center, centralizer, commutator_set, derived_subgroup, quotient, Quotient, Subgroup,
};
pub use table::{Elem, FiniteGroup};

/// Default cap on group orders accepted by the core routines.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("empty multiplication table")]
    EmptyTable,
    #[error("row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("row {row} contains {value}, outside 0..{order}")]
    EntryOutOfRange { row: usize, value: usize, order: usize },
    #[error("table is not a Latin square")]
    NotLatin,
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative")]
    NotAssociative,
    #[error("{names} element names given for a group of order {order}")]
    NameCount { names: usize, order: usize },
    #[error("invalid permutation {0}")]
    InvalidPermutation(String),
    #[error("permutations act on different point sets")]
    DegreeMismatch,
    #[error("empty generator list")]
    EmptyGeneratorList,
    #[error("generated group exceeds cap {0}")]
    ClosureExceedsCap(usize),
    #[error("member set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not abelian")]
    NotAbelian,
}
