use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cohomology::DEFAULT_ORACLE_CAP;
use crate::fp::{EnumerationConfig, Strategy};
use crate::group::{AbelianInvariants, DEFAULT_MAX_GROUP_ORDER};
use crate::isoclinism::IsoclinismWitness;
use crate::wedge::{WedgeConfig, DEFAULT_CURLY_CAP, DEFAULT_EXTERIOR_CAP};

use super::CatalogError;

pub const REPORT_SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Every knob that can change a report. Its hash is stamped into reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub max_group_order: usize,
    pub max_cosets: usize,
    pub strategy: Strategy,
    pub simplify: bool,
    pub curly_cap: usize,
    pub exterior_cap: usize,
    pub oracle: bool,
    pub oracle_cap: usize,
    pub fuzz_trials: usize,
    pub seed: u64,
    /// Wall-clock timings make reports nondeterministic, so they are opt-in
    /// and excluded from the hash.
    #[serde(skip)]
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        let e = EnumerationConfig::default();
        RunConfig {
            max_group_order: DEFAULT_MAX_GROUP_ORDER,
            max_cosets: e.max_cosets,
            strategy: e.strategy,
            simplify: e.simplify,
            curly_cap: DEFAULT_CURLY_CAP,
            exterior_cap: DEFAULT_EXTERIOR_CAP,
            oracle: false,
            oracle_cap: DEFAULT_ORACLE_CAP,
            fuzz_trials: 100,
            seed: 0,
            timing: false,
        }
    }
}

impl RunConfig {
    pub fn wedge_config(&self) -> WedgeConfig {
        WedgeConfig {
            enumeration: EnumerationConfig::default()
                .with_max_cosets(self.max_cosets)
                .with_strategy(self.strategy)
                .with_simplify(self.simplify),
            curly_cap: self.curly_cap,
            exterior_cap: self.exterior_cap,
        }
    }
}

/// SHA-256 of the canonical JSON form of `config`, in hex.
pub fn config_hash(config: &RunConfig) -> String {
    let bytes = serde_json::to_vec(config).expect("config serializes");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeSummary {
    pub order: usize,
    pub kernel_order: usize,
    pub kernel_invariants: AbelianInvariants,
    pub generators: usize,
    pub relators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub modulus: u64,
    pub h2_order: u64,
    pub h2_invariants: AbelianInvariants,
    pub multiplier_order: u64,
    pub b0_lower_bound: u64,
    pub b0_lower_bound_invariants: AbelianInvariants,
}

/// All invariants computed for one group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config_hash: String,
    pub group: String,
    pub order: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelianization: AbelianInvariants,
    /// `G ⋏ G`; its kernel is `B̃₀(G)`.
    pub curly: WedgeSummary,
    pub b0_invariants: AbelianInvariants,
    /// `G ∧ G`, when within the exterior cap.
    pub exterior: Option<WedgeSummary>,
    pub multiplier_order: Option<usize>,
    pub oracle: Option<OracleSummary>,
    pub family: Option<usize>,
    /// Name of the family representative whose witness covers this group.
    pub witnessed_by: Option<String>,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, f64>>,
}

impl InvariantReport {
    /// `|G⋏G| = |B̃₀|·|G'|` (and the same for `G∧G`), plus agreement of the
    /// duplicated fields.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let fail = |msg: String| Err(CatalogError::InconsistentReport(self.group.clone(), msg));
        for (name, w) in [("curly", Some(&self.curly)), ("exterior", self.exterior.as_ref())] {
            let Some(w) = w else { continue };
            if w.order != w.kernel_order * self.derived_order {
                return fail(format!(
                    "{name}: {} ≠ {}·{}",
                    w.order, w.kernel_order, self.derived_order
                ));
            }
            if w.kernel_invariants.order() != w.kernel_order as u64 {
                return fail(format!(
                    "{name}: kernel invariants {} vs order {}",
                    w.kernel_invariants, w.kernel_order
                ));
            }
        }
        if self.b0_invariants != self.curly.kernel_invariants {
            return fail("B̃₀ invariants disagree with the curly kernel".into());
        }
        if self.multiplier_order != self.exterior.as_ref().map(|w| w.kernel_order) {
            return fail("multiplier order disagrees with the exterior kernel".into());
        }
        if self.abelianization.order() as usize * self.derived_order != self.order {
            return fail("|G^ab|·|G'| ≠ |G|".into());
        }
        Ok(())
    }
}

/// Reports for a whole catalog, sorted by group name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config_hash: String,
    pub reports: Vec<InvariantReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub id: usize,
    pub members: Vec<String>,
    /// `(representative, member, witness)`.
    pub witnesses: Vec<(String, String, IsoclinismWitness)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamiliesReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub families: Vec<FamilyEntry>,
}

/// One row of the isoclinism pass/fail matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheck {
    pub first: String,
    pub second: String,
    pub family: usize,
    pub b0: [AbelianInvariants; 2],
    pub b0_equal: bool,
    pub curly_orders: [usize; 2],
    pub gamma_bijective: bool,
    pub gamma_tilde_bijective: bool,
    pub diagram_commutes: bool,
    pub fuzz_trials: usize,
    pub fuzz_agrees: bool,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub witness: IsoclinismWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config_hash: String,
    pub families: Vec<Vec<String>>,
    pub pairs: Vec<PairCheck>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub group: String,
    pub order: usize,
    /// `checked` or `skipped`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub multiplier_wedge: Option<usize>,
    pub multiplier_oracle: Option<u64>,
    pub multiplier_agrees: Option<bool>,
    pub b0_order: Option<usize>,
    pub b0_lower_bound: Option<u64>,
    pub bound_holds: Option<bool>,
    pub equality_observed: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config_hash: String,
    pub entries: Vec<OracleEntry>,
    pub passed: bool,
    pub warnings: Vec<String>,
}
