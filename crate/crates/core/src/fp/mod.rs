//! Finitely presented groups and coset enumeration.

mod coset;
mod presentation;
mod realize;
pub mod simplify;
mod word;

use thiserror::Error;

pub use coset::{todd_coxeter, CosetTable, EnumerationConfig, EnumerationStats, Strategy, DEFAULT_MAX_COSETS};
pub use presentation::{Presentation, PRESENTATION_SCHEMA_VERSION};
pub use realize::{enumerate_group, realize, Realization};
pub use word::{canonical_relator, cyclic_reduce, free_reduce, inverse_word, Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("coset enumeration exceeded {max_cosets} cosets")]
    CosetLimitExceeded { max_cosets: usize },
    #[error("coset table is not closed")]
    TableNotClosed,
    #[error("relator {relator} uses generator {generator} but there are {num_generators}")]
    GeneratorOutOfRange {
        relator: usize,
        generator: usize,
        num_generators: usize,
    },
    #[error("presentation JSON: {0}")]
    Json(String),
    #[error("internal enumeration error: {0}")]
    Internal(String),
}
