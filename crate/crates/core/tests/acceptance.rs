//! End-to-end acceptance checks on the shipped corpus. Prints one PASS/FAIL
//! line per criterion and exits non-zero if any fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grouplab::catalog::{compute_catalog, families_report, load_catalog, oracle_report, verify_theorem, RunConfig};
use grouplab::cohomology::{b0_lower_bound, multiplier_order_oracle, DEFAULT_ORACLE_CAP};
use grouplab::group::{derived_subgroup, FiniteGroup, DEFAULT_MAX_GROUP_ORDER};
use grouplab::isoclinism::{
    build_gamma, compose_witnesses, identity_witness, invert_witness, partition_into_families, verify_witness,
    well_definedness_fuzz,
};
use grouplab::wedge::{bogomolov_kernel, compute_wedge, WedgeConfig, WedgeVariant};

type Outcome = Result<String, String>;
type Check = fn(&[FiniteGroup]) -> Outcome;

fn corpus() -> Vec<FiniteGroup> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    load_catalog(&dir, DEFAULT_MAX_GROUP_ORDER).expect("corpus loads")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn theorem_suite(groups: &[FiniteGroup]) -> Outcome {
    let report = verify_theorem(groups, &RunConfig::default()).map_err(|e| e.to_string())?;
    for expected in [
        ["D4", "Q8"],
        ["ES3_p", "ES3_p2"],
        ["D6", "S3"],
        ["D6", "Dic3"],
        ["D6", "S3xC4"],
    ] {
        ensure(
            report
                .pairs
                .iter()
                .any(|p| [p.first.as_str(), p.second.as_str()] == expected),
            || format!("no witnessed pair {} ~ {}", expected[0], expected[1]),
        )?;
    }
    for p in &report.pairs {
        ensure(
            p.b0_equal && p.b0[0] == p.b0[1] && p.gamma_bijective && p.gamma_tilde_bijective && p.diagram_commutes,
            || format!("{} ~ {}: {:?}", p.first, p.second, p.error),
        )?;
    }
    ensure(report.passed, || "report not passed".into())?;
    Ok(format!(
        "{} witnessed pairs in {} families",
        report.pairs.len(),
        report.families.len()
    ))
}

fn abelian_collapse(groups: &[FiniteGroup]) -> Outcome {
    let cfg = WedgeConfig::default();
    let mut n = 0;
    for g in groups.iter().filter(|g| g.is_abelian()) {
        let w = compute_wedge(g, WedgeVariant::Curly, &cfg).map_err(|e| e.to_string())?;
        ensure(w.order() == 1 && w.kernel_invariants().is_trivial(), || {
            format!("{}: |G⋏G| = {}", g.label(), w.order())
        })?;
        n += 1;
    }
    Ok(format!("{n} abelian groups"))
}

fn exactness(groups: &[FiniteGroup]) -> Outcome {
    let cfg = WedgeConfig {
        exterior_cap: 32,
        ..WedgeConfig::default()
    };
    let mut n = 0;
    for g in groups {
        let derived = derived_subgroup(g);
        for variant in [WedgeVariant::Curly, WedgeVariant::Exterior] {
            let w = compute_wedge(g, variant, &cfg).map_err(|e| format!("{} {variant:?}: {e}", g.label()))?;
            let tag = || format!("{} {variant:?}", g.label());
            ensure(w.order() == w.kernel.order() * derived.order(), || {
                format!("{}: order", tag())
            })?;
            ensure(w.kappa.image_set() == derived.members(), || {
                format!("{}: κ not onto", tag())
            })?;
            ensure(w.kappa.is_homomorphism(w.group(), g), || {
                format!("{}: κ not a hom", tag())
            })?;
            ensure(w.kappa_relator_violation().is_none(), || format!("{}: relator", tag()))?;
            ensure(w.realization.satisfies(&w.presentation.presentation.relators), || {
                format!("{}: realization", tag())
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} realizations"))
}

fn multiplier_agreement(groups: &[FiniteGroup]) -> Outcome {
    let cfg = WedgeConfig::default();
    let mut n = 0;
    for g in groups.iter().filter(|g| g.order() <= 16) {
        let w = compute_wedge(g, WedgeVariant::Exterior, &cfg).map_err(|e| e.to_string())?;
        let oracle = multiplier_order_oracle(g, DEFAULT_ORACLE_CAP).map_err(|e| e.to_string())?;
        ensure(w.kernel.order() as u64 == oracle, || {
            format!("{}: wedge {} vs oracle {oracle}", g.label(), w.kernel.order())
        })?;
        n += 1;
    }
    Ok(format!("{n} groups of order ≤ 16"))
}

fn cohomological_bound(groups: &[FiniteGroup]) -> Outcome {
    let cfg = WedgeConfig::default();
    let (mut n, mut equal) = (0, Vec::new());
    for g in groups.iter().filter(|g| g.order() <= DEFAULT_ORACLE_CAP) {
        let b0 = bogomolov_kernel(g, &cfg).map_err(|e| e.to_string())?.order();
        let bound = b0_lower_bound(g, g.order() as u64, DEFAULT_ORACLE_CAP)
            .map_err(|e| e.to_string())?
            .order;
        ensure(bound <= b0, || format!("{}: bound {bound} > |B̃₀| {b0}", g.label()))?;
        if g.is_abelian() {
            ensure(bound == 1 && b0 == 1, || {
                format!("{}: abelian but {bound}, {b0}", g.label())
            })?;
        }
        if bound == b0 {
            equal.push(g.label().to_string());
        }
        n += 1;
    }
    Ok(format!("{n} groups, equality observed for {}", equal.len()))
}

fn fuzz(groups: &[FiniteGroup]) -> Outcome {
    let cfg = WedgeConfig::default();
    let fam = partition_into_families(groups);
    for (i, (r, m, w)) in fam.witnesses.iter().enumerate() {
        let (g1, g2) = (&groups[*r], &groups[*m]);
        let w1 = compute_wedge(g1, WedgeVariant::Curly, &cfg).map_err(|e| e.to_string())?;
        let w2 = compute_wedge(g2, WedgeVariant::Curly, &cfg).map_err(|e| e.to_string())?;
        let ok = well_definedness_fuzz(g1, g2, w, &w1, &w2, 100, i as u64).map_err(|e| e.to_string())?;
        ensure(ok, || {
            format!("{} ~ {}: γ depends on representatives", g1.label(), g2.label())
        })?;
        // Also the other direction.
        let inv = invert_witness(w);
        build_gamma(g2, g1, &inv, &w2, &w1).map_err(|e| e.to_string())?;
        let ok = well_definedness_fuzz(g2, g1, &inv, &w2, &w1, 100, i as u64).map_err(|e| e.to_string())?;
        ensure(ok, || {
            format!("{} ~ {}: γ depends on representatives", g2.label(), g1.label())
        })?;
    }
    Ok(format!("{} pairs × 2 directions × 100 trials", fam.witnesses.len()))
}

fn equivalence(groups: &[FiniteGroup]) -> Outcome {
    for g in groups {
        ensure(verify_witness(g, g, &identity_witness(g)), || {
            format!("{}: reflexivity", g.label())
        })?;
    }
    let fam = partition_into_families(groups);
    for (r, m, w) in &fam.witnesses {
        ensure(verify_witness(&groups[*m], &groups[*r], &invert_witness(w)), || {
            format!("{} ~ {}: inverse", groups[*r].label(), groups[*m].label())
        })?;
    }
    let mut composed = 0;
    for (r, a, wa) in &fam.witnesses {
        for (r2, b, wb) in &fam.witnesses {
            if r != r2 || a == b {
                continue;
            }
            // a → r → b
            let w = compose_witnesses(&invert_witness(wa), wb);
            ensure(verify_witness(&groups[*a], &groups[*b], &w), || {
                format!("{} ~ {}: composition", groups[*a].label(), groups[*b].label())
            })?;
            composed += 1;
        }
    }
    Ok(format!(
        "{} reflexive, {} inverses, {composed} compositions",
        groups.len(),
        fam.witnesses.len()
    ))
}

fn full_run(groups: &[FiniteGroup], threads: usize) -> Result<String, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| {
        let cfg = RunConfig {
            oracle: true,
            ..RunConfig::default()
        };
        let mut out = serde_json::to_string(&compute_catalog(groups, &cfg).map_err(|e| e.to_string())?).unwrap();
        out += &serde_json::to_string(&families_report(groups)).unwrap();
        out += &serde_json::to_string(&verify_theorem(groups, &cfg).map_err(|e| e.to_string())?).unwrap();
        out += &serde_json::to_string(&oracle_report(groups, &cfg)).unwrap();
        Ok(out)
    })
}

fn determinism(groups: &[FiniteGroup]) -> Outcome {
    let a = full_run(groups, 1)?;
    let b = full_run(groups, 4)?;
    ensure(a == b, || "reports differ between runs".into())?;
    Ok(format!("{} bytes identical", a.len()))
}

fn relabeling(groups: &[FiniteGroup]) -> Outcome {
    let cfg = WedgeConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for g in groups {
        let b0 = bogomolov_kernel(g, &cfg).map_err(|e| e.to_string())?;
        for _ in 0..10 {
            // The identity must stay at 0.
            let mut perm: Vec<usize> = (1..g.order()).collect();
            perm.shuffle(&mut rng);
            perm.insert(0, 0);
            let h = g.relabel(&perm);
            let b = bogomolov_kernel(&h, &cfg).map_err(|e| e.to_string())?;
            ensure(b == b0, || format!("{}: {b0} vs {b}", g.label()))?;
        }
    }
    Ok(format!("{} groups × 10 relabelings", groups.len()))
}

fn main() -> ExitCode {
    let groups = corpus();
    let checks: [(&str, Check); 9] = [
        ("1 isoclinic pairs have isomorphic B̃₀ via γ", theorem_suite),
        ("2 abelian collapse", abelian_collapse),
        ("3 exactness of both wedge variants", exactness),
        ("4 multiplier: wedge vs cohomology", multiplier_agreement),
        ("5 cohomological lower bound", cohomological_bound),
        ("6 well-definedness fuzz", fuzz),
        ("7 isoclinism is an equivalence relation", equivalence),
        ("8 determinism", determinism),
        ("9 relabeling invariance", relabeling),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let t = Instant::now();
        let result = check(&groups);
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {} of 9 passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
