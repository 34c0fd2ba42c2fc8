//! `grouplab`: curly-wedge squares, Bogomolov kernels and isoclinism checks
//! over catalogs of small groups.
//!
//! Exit codes: 0 success, 1 input error or failed verification, 2 resource cap.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use grouplab::catalog::{
    compute_catalog, compute_report, dump_cocycles_for, dump_presentation, families_report, load_catalog,
    oracle_report, parse_group_arg, verify_theorem, CatalogError, RunConfig,
};
use grouplab::cohomology::DEFAULT_ORACLE_CAP;
use grouplab::fp::Strategy;
use grouplab::group::{FiniteGroup, DEFAULT_MAX_GROUP_ORDER};
use grouplab::wedge::{WedgeVariant, DEFAULT_CURLY_CAP, DEFAULT_EXTERIOR_CAP};

#[derive(Parser, Debug)]
#[command(
    name = "grouplab",
    version,
    about = "Curly-wedge squares, Bogomolov kernels and isoclinism of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON result into this directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Standard output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Live-coset limit for coset enumeration.
    #[arg(long, global = true, env = "GROUPLAB_MAX_COSETS", default_value_t = 1_000_000)]
    max_cosets: usize,

    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GROUP_ORDER)]
    max_group_order: usize,

    /// Largest group order for the curly square.
    #[arg(long, global = true, default_value_t = DEFAULT_CURLY_CAP)]
    curly_cap: usize,

    /// Largest group order for the exterior square.
    #[arg(long, global = true, default_value_t = DEFAULT_EXTERIOR_CAP)]
    exterior_cap: usize,

    /// Largest group order for the cohomology oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,

    /// Also run the cohomology oracle in `compute`.
    #[arg(long, global = true)]
    oracle: bool,

    /// Coset enumeration strategy.
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Hlt)]
    strategy: StrategyArg,

    /// Enumerate the wedge presentations exactly as built, without Tietze
    /// simplification.
    #[arg(long, global = true)]
    no_simplify: bool,

    /// Random representative choices per pair in `verify-theorem`.
    #[arg(long, global = true, default_value_t = 100)]
    fuzz_trials: usize,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Include wall-clock timings in reports (makes them nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of one group (`builtin:<descriptor>` or a spec file) or of
    /// every group in a catalog directory.
    Compute { target: String },
    /// Partition a catalog into isoclinism families.
    Families { catalog: PathBuf },
    /// Check that isoclinic groups have isomorphic Bogomolov kernels, building
    /// the induced map between curly squares for every witnessed pair.
    VerifyTheorem { catalog: PathBuf },
    /// Cross-check wedge results against the cohomology oracle.
    Oracle { catalog: PathBuf },
    /// Print the presentation of G⋏G or G∧G.
    DumpPresentation {
        group: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Curly)]
        variant: VariantArg,
    },
    /// Print the H²(G, Z/m) basis, restriction matrices and kernel bound.
    DumpCocycles {
        group: String,
        /// Coefficient modulus (default |G|).
        #[arg(long)]
        modulus: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Hlt,
    Felsch,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Curly,
    Exterior,
}

impl Cli {
    fn config(&self) -> RunConfig {
        RunConfig {
            max_group_order: self.max_group_order,
            max_cosets: self.max_cosets,
            strategy: match self.strategy {
                StrategyArg::Hlt => Strategy::Hlt,
                StrategyArg::Felsch => Strategy::Felsch,
            },
            simplify: !self.no_simplify,
            curly_cap: self.curly_cap,
            exterior_cap: self.exterior_cap,
            oracle: self.oracle,
            oracle_cap: self.oracle_cap,
            fuzz_trials: self.fuzz_trials,
            seed: self.seed,
            timing: self.timing,
        }
    }
}

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

/// Writes `value` to `--out/<file>` and, with `--format json`, to stdout.
fn emit<T: Serialize>(cli: &Cli, file: &str, value: &T, summary: &[String]) -> Result<(), CatalogError> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize") + "\n";
    if let Some(dir) = &cli.out {
        let io = |path: &Path, e: std::io::Error| CatalogError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        };
        fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
        let path = dir.join(file);
        fs::write(&path, &text).map_err(|e| io(&path, e))?;
    }
    match cli.format {
        Format::Json => print!("{text}"),
        Format::Text => {
            for line in summary {
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn catalog(cli: &Cli, dir: &Path) -> Result<Vec<FiniteGroup>, CatalogError> {
    load_catalog(dir, cli.max_group_order)
}

fn group(cli: &Cli, arg: &str) -> Result<FiniteGroup, CatalogError> {
    parse_group_arg(arg, cli.max_group_order)
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// Returns whether every check passed.
fn run(cli: &Cli) -> Result<bool, CatalogError> {
    let config = cli.config();
    match &cli.command {
        Command::Compute { target } => {
            if Path::new(target).is_dir() {
                let groups = catalog(cli, Path::new(target))?;
                let report = compute_catalog(&groups, &config)?;
                let lines: Vec<String> = report
                    .reports
                    .iter()
                    .map(|r| {
                        format!(
                            "{}: |G|={} |G'|={} |G⋏G|={} B̃₀={} M={} family={}",
                            r.group,
                            r.order,
                            r.derived_order,
                            r.curly.order,
                            r.b0_invariants,
                            opt(&r.multiplier_order),
                            opt(&r.family)
                        )
                    })
                    .collect();
                emit(cli, "catalog.report.json", &report, &lines)?;
            } else {
                let g = group(cli, target)?;
                let r = compute_report(&g, &config)?;
                let mut lines = vec![
                    format!("group {} of order {}", r.group, r.order),
                    format!(
                        "|Z(G)| = {}, |G'| = {}, G^ab = {}",
                        r.center_order, r.derived_order, r.abelianization
                    ),
                    format!("|G⋏G| = {}, B̃₀(G) = {}", r.curly.order, r.b0_invariants),
                ];
                if let Some(e) = &r.exterior {
                    lines.push(format!("|G∧G| = {}, |M(G)| = {}", e.order, e.kernel_order));
                }
                if let Some(o) = &r.oracle {
                    lines.push(format!(
                        "oracle: |H²(G,Z/{})| = {}, |M(G)| = {}, B₀ lower bound = {}",
                        o.modulus, o.h2_order, o.multiplier_order, o.b0_lower_bound
                    ));
                }
                lines.extend(r.notes.iter().map(|n| format!("note: {n}")));
                emit(cli, &format!("{}.report.json", file_stem(&r.group)), &r, &lines)?;
            }
            Ok(true)
        }
        Command::Families { catalog: dir } => {
            let groups = catalog(cli, dir)?;
            let report = families_report(&groups);
            let lines: Vec<String> = report
                .families
                .iter()
                .map(|f| format!("family {}: {}", f.id, f.members.join(", ")))
                .collect();
            emit(cli, "families.json", &report, &lines)?;
            Ok(true)
        }
        Command::VerifyTheorem { catalog: dir } => {
            let groups = catalog(cli, dir)?;
            let report = verify_theorem(&groups, &config)?;
            let mut lines: Vec<String> = report
                .pairs
                .iter()
                .map(|p| {
                    format!(
                        "{} {} ~ {}: B̃₀ {} / {}, γ bijective {}, γ̃ bijective {}, diagram {}, fuzz {}{}",
                        if p.passed { "PASS" } else { "FAIL" },
                        p.first,
                        p.second,
                        p.b0[0],
                        p.b0[1],
                        p.gamma_bijective,
                        p.gamma_tilde_bijective,
                        p.diagram_commutes,
                        p.fuzz_agrees,
                        p.error.as_ref().map_or(String::new(), |e| format!(" ({e})"))
                    )
                })
                .collect();
            lines.push(format!(
                "{} families, {} pairs: {}",
                report.families.len(),
                report.pairs.len(),
                if report.passed { "all passed" } else { "FAILED" }
            ));
            emit(cli, "verify-theorem.json", &report, &lines)?;
            Ok(report.passed)
        }
        Command::Oracle { catalog: dir } => {
            let groups = catalog(cli, dir)?;
            let report = oracle_report(&groups, &config);
            let mut lines: Vec<String> = report
                .entries
                .iter()
                .map(|e| {
                    format!(
                        "{}: {} M wedge/oracle {}/{} B̃₀ {} bound {}{}",
                        e.group,
                        e.status,
                        opt(&e.multiplier_wedge),
                        opt(&e.multiplier_oracle),
                        opt(&e.b0_order),
                        opt(&e.b0_lower_bound),
                        e.reason.as_ref().map_or(String::new(), |r| format!(" ({r})"))
                    )
                })
                .collect();
            lines.extend(report.warnings.iter().map(|w| format!("warning: {w}")));
            lines.push(if report.passed {
                "oracle agrees".into()
            } else {
                "oracle DISAGREES".into()
            });
            emit(cli, "oracle.json", &report, &lines)?;
            Ok(report.passed)
        }
        Command::DumpPresentation { group: arg, variant } => {
            let g = group(cli, arg)?;
            let (variant, tag) = match variant {
                VariantArg::Curly => (WedgeVariant::Curly, "curly"),
                VariantArg::Exterior => (WedgeVariant::Exterior, "exterior"),
            };
            let p = dump_presentation(&g, variant, &config)?;
            let text = p.to_json();
            let value: serde_json::Value = serde_json::from_str(&text).expect("presentation JSON");
            let lines = vec![format!(
                "{}: {} generators, {} relators",
                p.label,
                p.num_generators,
                p.relators.len()
            )];
            emit(
                cli,
                &format!("{}.{tag}.presentation.json", file_stem(g.label())),
                &value,
                &lines,
            )?;
            Ok(true)
        }
        Command::DumpCocycles { group: arg, modulus } => {
            let g = group(cli, arg)?;
            let d = dump_cocycles_for(&g, *modulus, &config)?;
            let lines = vec![format!(
                "{}: H²(G, Z/{}) = {} (order {}), B₀ lower bound {}",
                d.group, d.modulus, d.h2_invariants, d.h2_order, d.b0_lower_bound
            )];
            emit(cli, &format!("{}.cocycles.json", file_stem(g.label())), &d, &lines)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build();
    let result = match pool {
        Ok(pool) => pool.install(|| run(&cli)),
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
