//! Group ingestion, reports and the batch commands behind the CLI.

pub mod builtin;
mod commands;
mod report;
mod spec;

use std::path::PathBuf;

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::fp::FpError;
use crate::group::GroupError;
use crate::isoclinism::IsoclinismError;
use crate::wedge::WedgeError;

pub use commands::{
    compute_catalog, compute_report, dump_cocycles_for, dump_presentation, families_report, oracle_report,
    verify_theorem,
};
pub use report::{
    config_hash, CatalogReport, FamiliesReport, FamilyEntry, InvariantReport, OracleEntry, OracleReport, OracleSummary,
    PairCheck, RunConfig, TheoremReport, WedgeSummary, REPORT_SCHEMA_VERSION, TOOL_VERSION,
};
pub use spec::{
    load_catalog, load_group_file, parse_group_arg, save_catalog, GroupSource, GroupSpecFile, SPEC_SCHEMA_VERSION,
};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown group family {0:?}")]
    UnknownFamily(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("{}: {message}", path.display())]
    Io { path: PathBuf, message: String },
    #[error("{}:{line}:{column}: {message}", file.display())]
    Parse {
        file: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{}: {source}", file.display())]
    Validation { file: PathBuf, source: GroupError },
    #[error("duplicate group name {0:?}")]
    DuplicateName(String),
    #[error("group {name} of order {order} exceeds the group order cap {cap}")]
    GroupTooLarge { name: String, order: usize, cap: usize },
    #[error("{group}: {source}")]
    Wedge { group: String, source: WedgeError },
    #[error("{group}: {source}")]
    Cohomology { group: String, source: CohomologyError },
    #[error("{first} ~ {second}: {source}")]
    Isoclinism {
        first: String,
        second: String,
        source: IsoclinismError,
    },
    #[error("report for {0} is internally inconsistent: {1}")]
    InconsistentReport(String, String),
}

impl CatalogError {
    /// `2` for resource caps, `1` for everything else.
    pub fn exit_code(&self) -> i32 {
        let cap = match self {
            CatalogError::GroupTooLarge { .. } => true,
            CatalogError::Validation {
                source: GroupError::ClosureExceedsCap(_),
                ..
            } => true,
            CatalogError::Wedge { source, .. } => matches!(
                source,
                WedgeError::GroupTooLarge { .. } | WedgeError::Enumeration(FpError::CosetLimitExceeded { .. })
            ),
            CatalogError::Cohomology { source, .. } => {
                matches!(source, CohomologyError::GroupTooLargeForOracle { .. })
            }
            CatalogError::Isoclinism {
                source: IsoclinismError::Wedge(w),
                ..
            } => matches!(
                w,
                WedgeError::GroupTooLarge { .. } | WedgeError::Enumeration(FpError::CosetLimitExceeded { .. })
            ),
            _ => false,
        };
        if cap {
            2
        } else {
            1
        }
    }
}
