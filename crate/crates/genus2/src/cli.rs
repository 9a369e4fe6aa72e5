//! Command dispatch for the `genus2` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::engine::{AlgebraMode, Engine, IdealItems};
use crate::free::NormalElement;
use crate::mcg::MappingClassAction;
use crate::poisson;
use crate::print::render;
use crate::qdiff::{RepCheckOptions, RepImages};
use crate::report::Report;

#[derive(Parser)]
#[command(
    name = "genus2",
    about = "Exact engine for the two-parameter genus-two algebra and its specializations",
    version
)]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: the GENUS2_THREADS variable, then all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Base seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Load the relator bundle from a JSON file instead of the embedded data.
    #[arg(long, global = true)]
    pub data: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Args)]
pub struct AlgebraArg {
    /// One of: qt, skein, q1t, qt1.
    #[arg(long, default_value = "qt")]
    pub algebra: String,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the canonical form of an expression.
    Reduce {
        #[command(flatten)]
        algebra: AlgebraArg,
        expr: String,
    },
    /// Multiply two expressions and print the canonical form.
    Mul {
        #[command(flatten)]
        algebra: AlgebraArg,
        e1: String,
        e2: String,
    },
    /// Poisson bracket of two expressions in the commutative algebra.
    Bracket {
        e1: String,
        e2: String,
        /// Specialize the result to t = 1.
        #[arg(long)]
        t1: bool,
    },
    /// Apply a mapping-class-group word like "d1 d2^-1 I I" to an expression.
    Act {
        #[command(flatten)]
        algebra: AlgebraArg,
        word: String,
        expr: String,
    },
    /// Run a verification suite.
    Verify {
        /// One of: table, jrel, casimir, groebner, mcg, qdiff, poisson,
        /// charvar, all.
        suite: String,
        /// Skip the central-relator operator check in the qdiff suite.
        #[arg(long)]
        skip_casimir: bool,
        /// Restrict the qdiff relator checks to one relator, e.g. "g21".
        #[arg(long)]
        only: Option<String>,
        /// Field size for the character-variety suite.
        #[arg(long, default_value_t = 1000003)]
        p: u64,
        /// Sample count for the character-variety suite.
        #[arg(long, default_value_t = 100)]
        n: u32,
    },
    /// Sample finite-field surface-group representations and check them.
    Sample {
        #[arg(long, default_value_t = 1000003)]
        p: u64,
        #[arg(long, default_value_t = 100)]
        n: u32,
    },
}

fn parse_mode(name: &str) -> Result<AlgebraMode, String> {
    AlgebraMode::from_name(name)
        .ok_or_else(|| format!("unknown algebra '{name}' (expected qt, skein, q1t or qt1)"))
}

fn load_engine(data: &Option<PathBuf>) -> Result<Engine, String> {
    match data {
        None => Engine::new().map_err(|e| e.to_string()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let bundle: crate::bundle::Bundle =
                serde_json::from_str(&text).map_err(|e| format!("bad bundle: {e}"))?;
            crate::bundle::load(&bundle).map_err(|e| e.to_string())
        }
    }
}

fn parse_expr(src: &str) -> Result<crate::free::FreeElement, String> {
    crate::parse::parse_free(src).map_err(|e| e.to_string())
}

fn emit_element(json: bool, mode: AlgebraMode, e: &NormalElement) {
    if json {
        println!(
            "{}",
            crate::bundle::element_output(mode.name(), e)
        );
    } else {
        println!("{}", render(e));
    }
}

fn emit_report(json: bool, report: &Report) -> i32 {
    if json {
        let checks: Vec<serde_json::Value> = report
            .checks
            .iter()
            .map(|c| serde_json::json!({"name": c.name, "pass": c.pass}))
            .collect();
        println!(
            "{}",
            serde_json::json!({
                "suite": report.name,
                "passed": report.passed(),
                "checks": checks,
            })
        );
    } else {
        report.print_full();
    }
    if report.passed() {
        0
    } else {
        1
    }
}

/// Usage or expression errors exit 2; verification failures exit 1.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match run_cli(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn run_cli(cli: Cli) -> Result<i32, String> {
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("GENUS2_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let engine = load_engine(&cli.data)?;
    match cli.cmd {
        Command::Reduce { algebra, expr } => {
            let mode = parse_mode(&algebra.algebra)?;
            let e = parse_expr(&expr)?;
            let r = engine.reduce_free(&e, mode).map_err(|e| e.to_string())?;
            emit_element(cli.json, mode, &r);
            Ok(0)
        }
        Command::Mul { algebra, e1, e2 } => {
            let mode = parse_mode(&algebra.algebra)?;
            let a = engine
                .reduce_free(&parse_expr(&e1)?, mode)
                .map_err(|e| e.to_string())?;
            let b = engine
                .reduce_free(&parse_expr(&e2)?, mode)
                .map_err(|e| e.to_string())?;
            let r = engine.multiply(&a, &b, mode).map_err(|e| e.to_string())?;
            emit_element(cli.json, mode, &r);
            Ok(0)
        }
        Command::Bracket { e1, e2, t1 } => {
            let a = engine
                .normal_order(&parse_expr(&e1)?, AlgebraMode::Q1T)
                .clone();
            let b = engine.normal_order(&parse_expr(&e2)?, AlgebraMode::Q1T);
            let r = if t1 {
                poisson::bracket_t1(&engine, &a, &b).map_err(|e| e.to_string())?
            } else {
                poisson::bracket(&engine, &a, &b).map_err(|e| e.to_string())?
            };
            let mode = if t1 { AlgebraMode::QT1 } else { AlgebraMode::Q1T };
            emit_element(cli.json, mode, &r);
            Ok(0)
        }
        Command::Act { algebra, word, expr } => {
            let mode = parse_mode(&algebra.algebra)?;
            let letters = crate::mcg::parse_word(&word)?;
            let mcg = MappingClassAction::new().map_err(|e| e.to_string())?;
            let e = engine
                .reduce_free(&parse_expr(&expr)?, mode)
                .map_err(|e| e.to_string())?;
            let r = mcg
                .apply(&engine, &letters, &e, mode)
                .map_err(|e| e.to_string())?;
            emit_element(cli.json, mode, &r);
            Ok(0)
        }
        Command::Verify { suite, skip_casimir, only, p, n } => {
            let report = run_suite(&engine, &suite, skip_casimir, only, p, n, cli.seed)?;
            Ok(emit_report(cli.json, &report))
        }
        Command::Sample { p, n } => {
            let mcg = MappingClassAction::new().map_err(|e| e.to_string())?;
            let report = crate::charvar::verify_on_reps(&engine, &mcg, n, p, cli.seed)
                .map_err(|e| e.to_string())?;
            Ok(emit_report(cli.json, &report))
        }
    }
}

pub fn run_suite(
    engine: &Engine,
    suite: &str,
    skip_casimir: bool,
    only: Option<String>,
    p: u64,
    n: u32,
    seed: u64,
) -> Result<Report, String> {
    let err = |e: crate::engine::EngineError| e.to_string();
    let mut report = Report::new(format!("verify {suite}"));
    let mcg = MappingClassAction::new().map_err(|e| e.to_string())?;
    let mut run = |name: &str| -> Result<(), String> {
        match name {
            "table" => report.merge(engine.verify_table()),
            "jrel" => {
                report.merge(engine.verify_ideal(IdealItems::Etas, AlgebraMode::QT).map_err(err)?);
                report.merge(engine.verify_ideal(IdealItems::Rhos, AlgebraMode::QT).map_err(err)?);
                report
                    .merge(engine.verify_ideal(IdealItems::Rhos, AlgebraMode::Q1T).map_err(err)?);
            }
            "casimir" => {
                for mode in AlgebraMode::ALL {
                    report.merge(engine.verify_ideal(IdealItems::Casimir, mode).map_err(err)?);
                }
            }
            "groebner" => {
                report
                    .merge(engine.verify_ideal(IdealItems::GClosure, AlgebraMode::QT).map_err(err)?);
                report.merge(engine.verify_strategy_agreement(200, 12, seed).map_err(err)?);
                report.merge(engine.verify_flatness(500, 6, seed).map_err(err)?);
            }
            "mcg" => {
                for mode in [AlgebraMode::QT, AlgebraMode::Q1T] {
                    report.merge(mcg.verify_relations(engine, mode).map_err(err)?);
                    for letter in [
                        crate::mcg::Letter::Twist(1, false),
                        crate::mcg::Letter::Twist(1, true),
                        crate::mcg::Letter::Rot(false),
                    ] {
                        report.merge(
                            mcg.verify_ideal_invariance(engine, letter, mode, true)
                                .map_err(err)?,
                        );
                    }
                }
            }
            "qdiff" => {
                let images = RepImages::new();
                let only_idx = match &only {
                    None => None,
                    Some(s) => Some(
                        s.trim_start_matches('g')
                            .parse::<usize>()
                            .ok()
                            .filter(|i| (1..=61).contains(i))
                            .ok_or_else(|| format!("bad --only value '{s}'"))?,
                    ),
                };
                let opts = RepCheckOptions { skip_casimir, only: only_idx };
                report.merge(
                    crate::qdiff::verify_representation(engine, &images, opts).map_err(err)?,
                );
                if only.is_none() {
                    report.merge(crate::qdiff::verify_classical(engine, &images).map_err(err)?);
                }
            }
            "poisson" => {
                report.merge(poisson::verify_poisson(engine, &mcg, false, seed).map_err(err)?);
                report.merge(poisson::verify_poisson(engine, &mcg, true, seed).map_err(err)?);
            }
            "charvar" => {
                report
                    .merge(crate::charvar::verify_on_reps(engine, &mcg, n, p, seed).map_err(err)?);
            }
            other => return Err(format!("unknown suite '{other}'")),
        }
        Ok(())
    };
    if suite == "all" {
        for name in [
            "table", "jrel", "casimir", "groebner", "mcg", "qdiff", "poisson", "charvar",
        ] {
            run(name)?;
        }
    } else {
        run(suite)?;
    }
    Ok(report)
}
