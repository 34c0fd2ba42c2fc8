use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::cohomology::{dump_cocycles, maximal_abelian_restrictions, restriction_kernel, CocycleDump, CocycleSpace};
use crate::fp::Presentation;
use crate::group::{abelian_invariants, center, derived_subgroup, quotient, FiniteGroup};
use crate::isoclinism::{build_gamma, partition_into_families, well_definedness_fuzz, Families};
use crate::wedge::{build_wedge_presentation, compute_wedge, WedgeRealization, WedgeVariant};

use super::report::*;
use super::CatalogError;

fn summary(w: &WedgeRealization) -> WedgeSummary {
    WedgeSummary {
        order: w.order(),
        kernel_order: w.kernel.order(),
        kernel_invariants: w.kernel_invariants(),
        generators: w.presentation.presentation.num_generators,
        relators: w.presentation.presentation.relators.len(),
    }
}

fn check_order(g: &FiniteGroup, config: &RunConfig) -> Result<(), CatalogError> {
    if g.order() > config.max_group_order {
        return Err(CatalogError::GroupTooLarge {
            name: g.label().to_string(),
            order: g.order(),
            cap: config.max_group_order,
        });
    }
    Ok(())
}

fn wedge(g: &FiniteGroup, variant: WedgeVariant, config: &RunConfig) -> Result<WedgeRealization, CatalogError> {
    compute_wedge(g, variant, &config.wedge_config()).map_err(|source| CatalogError::Wedge {
        group: g.label().to_string(),
        source,
    })
}

fn oracle_summary(g: &FiniteGroup, config: &RunConfig) -> Result<OracleSummary, CatalogError> {
    let err = |source| CatalogError::Cohomology {
        group: g.label().to_string(),
        source,
    };
    let m = g.order() as u64;
    let space = CocycleSpace::new(g, m, config.oracle_cap).map_err(err)?;
    let restrictions = maximal_abelian_restrictions(&space).map_err(err)?;
    let bound = restriction_kernel(&space, &restrictions);
    let abelianization = (g.order() / derived_subgroup(g).order()) as u64;
    let h2 = space.h2_order();
    if h2 % abelianization != 0 {
        return Err(err(crate::cohomology::CohomologyError::InconsistentOrders {
            modulus: m,
            h2,
            abelianization,
        }));
    }
    Ok(OracleSummary {
        modulus: m,
        h2_order: h2,
        h2_invariants: space.h2_invariants(),
        multiplier_order: h2 / abelianization,
        b0_lower_bound: bound.order,
        b0_lower_bound_invariants: bound.invariants,
    })
}

/// Structural invariants, both squares (the exterior one when within its
/// cap), and optionally the cohomology oracle.
pub fn compute_report(g: &FiniteGroup, config: &RunConfig) -> Result<InvariantReport, CatalogError> {
    check_order(g, config)?;
    let mut timing = BTreeMap::new();
    let mut notes = Vec::new();
    let t = Instant::now();
    let derived = derived_subgroup(g);
    let ab = quotient(g, &derived).expect("derived subgroup is normal");
    let abelianization = abelian_invariants(&ab.group, None, false).expect("no abelian assertion requested");
    timing.insert("structure".to_string(), t.elapsed().as_secs_f64() * 1e3);

    let t = Instant::now();
    let curly = wedge(g, WedgeVariant::Curly, config)?;
    timing.insert("curly".to_string(), t.elapsed().as_secs_f64() * 1e3);

    let exterior = if g.order() <= config.exterior_cap {
        let t = Instant::now();
        let w = wedge(g, WedgeVariant::Exterior, config)?;
        timing.insert("exterior".to_string(), t.elapsed().as_secs_f64() * 1e3);
        Some(summary(&w))
    } else {
        notes.push(format!(
            "exterior square skipped: order {} exceeds cap {}",
            g.order(),
            config.exterior_cap
        ));
        None
    };

    let oracle = if !config.oracle {
        None
    } else if g.order() > config.oracle_cap {
        notes.push(format!(
            "oracle skipped: order {} exceeds cap {}",
            g.order(),
            config.oracle_cap
        ));
        None
    } else {
        let t = Instant::now();
        let o = oracle_summary(g, config)?;
        timing.insert("oracle".to_string(), t.elapsed().as_secs_f64() * 1e3);
        Some(o)
    };

    let curly = summary(&curly);
    let report = InvariantReport {
        schema_version: REPORT_SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        config_hash: config_hash(config),
        group: g.label().to_string(),
        order: g.order(),
        center_order: center(g).order(),
        derived_order: derived.order(),
        abelianization,
        b0_invariants: curly.kernel_invariants.clone(),
        curly,
        multiplier_order: exterior.as_ref().map(|w| w.kernel_order),
        exterior,
        oracle,
        family: None,
        witnessed_by: None,
        notes,
        timing_ms: config.timing.then_some(timing),
    };
    report.validate()?;
    Ok(report)
}

/// Reports for every group plus isoclinism family ids; groups must be
/// sorted by name (as [`super::load_catalog`] returns them).
pub fn compute_catalog(groups: &[FiniteGroup], config: &RunConfig) -> Result<CatalogReport, CatalogError> {
    for g in groups {
        check_order(g, config)?;
    }
    let results: Vec<Result<InvariantReport, CatalogError>> =
        groups.par_iter().map(|g| compute_report(g, config)).collect();
    let mut reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let fam = partition_into_families(groups);
    for (k, members) in fam.families.iter().enumerate() {
        for &i in members {
            reports[i].family = Some(k);
        }
    }
    for (rep, member, _) in &fam.witnesses {
        reports[*member].witnessed_by = Some(groups[*rep].label().to_string());
    }
    Ok(CatalogReport {
        schema_version: REPORT_SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        config_hash: config_hash(config),
        reports,
    })
}

fn families_of(groups: &[FiniteGroup], fam: &Families) -> Vec<FamilyEntry> {
    fam.families
        .iter()
        .enumerate()
        .map(|(id, members)| FamilyEntry {
            id,
            members: members.iter().map(|&i| groups[i].label().to_string()).collect(),
            witnesses: fam
                .witnesses
                .iter()
                .filter(|(_, m, _)| members.contains(m))
                .map(|(r, m, w)| {
                    (
                        groups[*r].label().to_string(),
                        groups[*m].label().to_string(),
                        w.clone(),
                    )
                })
                .collect(),
        })
        .collect()
}

pub fn families_report(groups: &[FiniteGroup]) -> FamiliesReport {
    let fam = partition_into_families(groups);
    FamiliesReport {
        schema_version: REPORT_SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        families: families_of(groups, &fam),
    }
}

/// Partitions the catalog and, for every witnessed pair, compares `B̃₀`,
/// builds `γ`, checks the diagram and fuzzes the choice of representatives.
pub fn verify_theorem(groups: &[FiniteGroup], config: &RunConfig) -> Result<TheoremReport, CatalogError> {
    for g in groups {
        check_order(g, config)?;
    }
    let fam = partition_into_families(groups);
    let mut needed = vec![false; groups.len()];
    for (r, m, _) in &fam.witnesses {
        needed[*r] = true;
        needed[*m] = true;
    }
    let wedges: Vec<Option<WedgeRealization>> = groups
        .par_iter()
        .zip(needed.par_iter())
        .map(|(g, &need)| need.then(|| wedge(g, WedgeVariant::Curly, config)).transpose())
        .collect::<Result<_, _>>()?;

    let pairs: Vec<PairCheck> = fam
        .witnesses
        .par_iter()
        .map(|(r, m, witness)| {
            let (g1, g2) = (&groups[*r], &groups[*m]);
            let (w1, w2) = (wedges[*r].as_ref().unwrap(), wedges[*m].as_ref().unwrap());
            let b0 = [w1.kernel_invariants(), w2.kernel_invariants()];
            let mut check = PairCheck {
                first: g1.label().to_string(),
                second: g2.label().to_string(),
                family: fam.family_of(*r).unwrap(),
                b0_equal: b0[0] == b0[1],
                b0,
                curly_orders: [w1.order(), w2.order()],
                gamma_bijective: false,
                gamma_tilde_bijective: false,
                diagram_commutes: false,
                fuzz_trials: config.fuzz_trials,
                fuzz_agrees: false,
                passed: false,
                error: None,
                witness: witness.clone(),
            };
            // build_gamma only succeeds once γ and γ̃ are bijective and the
            // diagram commutes.
            match build_gamma(g1, g2, witness, w1, w2) {
                Ok(_) => {
                    check.gamma_bijective = true;
                    check.gamma_tilde_bijective = true;
                    check.diagram_commutes = true;
                }
                Err(e) => check.error = Some(e.to_string()),
            }
            if check.error.is_none() {
                match well_definedness_fuzz(g1, g2, witness, w1, w2, config.fuzz_trials, config.seed) {
                    Ok(ok) => check.fuzz_agrees = ok,
                    Err(e) => check.error = Some(e.to_string()),
                }
            }
            check.passed = check.b0_equal
                && check.gamma_bijective
                && check.gamma_tilde_bijective
                && check.diagram_commutes
                && check.fuzz_agrees;
            check
        })
        .collect();
    let passed = pairs.iter().all(|p| p.passed);
    Ok(TheoremReport {
        schema_version: REPORT_SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        config_hash: config_hash(config),
        families: fam
            .families
            .iter()
            .map(|f| f.iter().map(|&i| groups[i].label().to_string()).collect())
            .collect(),
        pairs,
        passed,
    })
}

fn oracle_entry(g: &FiniteGroup, config: &RunConfig) -> OracleEntry {
    let mut e = OracleEntry {
        group: g.label().to_string(),
        order: g.order(),
        status: "skipped".into(),
        reason: None,
        multiplier_wedge: None,
        multiplier_oracle: None,
        multiplier_agrees: None,
        b0_order: None,
        b0_lower_bound: None,
        bound_holds: None,
        equality_observed: None,
    };
    if g.order() > config.oracle_cap {
        e.reason = Some(format!("order {} exceeds oracle cap {}", g.order(), config.oracle_cap));
        return e;
    }
    let result = (|| -> Result<(), CatalogError> {
        let o = oracle_summary(g, config)?;
        let curly = wedge(g, WedgeVariant::Curly, config)?;
        e.multiplier_oracle = Some(o.multiplier_order);
        e.b0_lower_bound = Some(o.b0_lower_bound);
        e.b0_order = Some(curly.kernel.order());
        e.bound_holds = Some(o.b0_lower_bound <= curly.kernel.order() as u64);
        e.equality_observed = Some(o.b0_lower_bound == curly.kernel.order() as u64);
        if g.order() <= config.exterior_cap {
            let m = wedge(g, WedgeVariant::Exterior, config)?.kernel.order();
            e.multiplier_wedge = Some(m);
            e.multiplier_agrees = Some(m as u64 == o.multiplier_order);
        }
        Ok(())
    })();
    match result {
        Ok(()) => e.status = "checked".into(),
        Err(err) => e.reason = Some(err.to_string()),
    }
    e
}

/// Cross-checks the wedge computations against the cohomology oracle; groups
/// beyond a cap are reported as skipped.
pub fn oracle_report(groups: &[FiniteGroup], config: &RunConfig) -> OracleReport {
    let entries: Vec<OracleEntry> = groups.par_iter().map(|g| oracle_entry(g, config)).collect();
    let warnings = entries
        .iter()
        .filter_map(|e| e.reason.as_ref().map(|r| format!("{}: {r}", e.group)))
        .collect();
    let passed = entries
        .iter()
        .all(|e| e.multiplier_agrees != Some(false) && e.bound_holds != Some(false));
    OracleReport {
        schema_version: REPORT_SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        config_hash: config_hash(config),
        entries,
        passed,
        warnings,
    }
}

pub fn dump_presentation(
    g: &FiniteGroup,
    variant: WedgeVariant,
    config: &RunConfig,
) -> Result<Presentation, CatalogError> {
    let cap = config.wedge_config().cap(variant);
    build_wedge_presentation(g, variant, cap)
        .map(|wp| wp.presentation)
        .map_err(|source| CatalogError::Wedge {
            group: g.label().to_string(),
            source,
        })
}

pub fn dump_cocycles_for(
    g: &FiniteGroup,
    modulus: Option<u64>,
    config: &RunConfig,
) -> Result<CocycleDump, CatalogError> {
    let m = modulus.unwrap_or(g.order() as u64);
    dump_cocycles(g, m, config.oracle_cap).map_err(|source| CatalogError::Cohomology {
        group: g.label().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin::{cyclic, dicyclic, dihedral};
    use crate::fp::FpError;
    use crate::wedge::WedgeError;

    #[test]
    fn s3_report() {
        let cfg = RunConfig {
            oracle: true,
            ..RunConfig::default()
        };
        let r = compute_report(&dihedral(3), &cfg).unwrap();
        assert_eq!(r.curly.order, 3);
        assert!(r.b0_invariants.is_trivial());
        assert_eq!(r.multiplier_order, Some(1));
        assert_eq!(r.oracle.as_ref().unwrap().multiplier_order, 1);
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<InvariantReport>(&text).unwrap(), r);
    }

    #[test]
    fn cyclic_twelve_and_caps() {
        let r = compute_report(&cyclic(12), &RunConfig::default()).unwrap();
        assert!(r.b0_invariants.is_trivial());
        assert!(r.exterior.is_some());
        let r = compute_report(&cyclic(20), &RunConfig::default()).unwrap();
        assert!(r.exterior.is_none());
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn coset_cap_surfaces_as_exit_two() {
        let cfg = RunConfig {
            max_cosets: 2,
            simplify: false,
            ..RunConfig::default()
        };
        let err = compute_report(&dihedral(3), &cfg).unwrap_err();
        assert!(matches!(
            err,
            CatalogError::Wedge {
                source: WedgeError::Enumeration(FpError::CosetLimitExceeded { .. }),
                ..
            }
        ));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn theorem_on_small_catalog() {
        let s3 = dihedral(3);
        let mut groups = vec![
            dihedral(4).with_label("D4"),
            dicyclic(2).with_label("Q8"),
            s3.clone().with_label("S3"),
            s3.direct_product(&cyclic(2)).with_label("S3xC2"),
            cyclic(4).with_label("C4"),
            cyclic(2).direct_product(&cyclic(2)).with_label("V4"),
        ];
        groups.sort_by(|a, b| a.label().cmp(b.label()));
        let r = verify_theorem(&groups, &RunConfig::default()).unwrap();
        assert!(r.passed);
        assert_eq!(
            r.families,
            vec![vec!["C4", "V4"], vec!["D4", "Q8"], vec!["S3", "S3xC2"]]
        );
        assert_eq!(r.pairs.len(), 3);
    }

    #[test]
    fn oracle_skips_large_groups() {
        let groups = vec![cyclic(30), dihedral(4)];
        let r = oracle_report(&groups, &RunConfig::default());
        assert!(r.passed);
        assert_eq!(r.entries[0].status, "skipped");
        assert_eq!(r.entries[1].multiplier_agrees, Some(true));
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn config_hash_ignores_timing() {
        let a = RunConfig::default();
        let b = RunConfig {
            timing: true,
            ..RunConfig::default()
        };
        let c = RunConfig {
            max_cosets: 5,
            ..RunConfig::default()
        };
        assert_eq!(config_hash(&a), config_hash(&b));
        assert_ne!(config_hash(&a), config_hash(&c));
        assert_eq!(config_hash(&a).len(), 64);
    }
}
