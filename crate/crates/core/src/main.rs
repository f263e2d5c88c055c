use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use relalg::classify::ClassVerdict;
use relalg::format::{parse_network, write_algebra, write_network};
use relalg::solver::Verdict;
use relalg::{
    add_flexible_atom, analyze, catalog, classify, gen_algebra, gen_network, integralize,
    load_algebra, solve, Budget, ClassifyOptions, Error, Result,
};

#[derive(Parser)]
#[command(
    name = "relalg",
    version,
    about = "Relation algebra network satisfaction and NSP classification"
)]
struct Cli {
    /// Output format; reports default to json, algebras and networks to
    /// their text formats.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Wall-clock limit per search.
    #[arg(long, global = true)]
    timeout_ms: Option<u64>,
    /// Node limit per search.
    #[arg(long, global = true, default_value_t = relalg::search::DEFAULT_NODE_BUDGET)]
    budget_nodes: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write output to a file instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the relation algebra axioms.
    Validate { algebra: String },
    /// Report symmetry, integrality and flexible atoms.
    Analyze { algebra: String },
    /// Decide P vs NP-complete for the network satisfaction problem.
    Classify {
        algebra: String,
        /// Include per-pair wall-clock times (output is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Decide satisfiability of a network file.
    Solve { algebra: String, network: PathBuf },
    #[command(subcommand)]
    Transform(Transform),
    #[command(subcommand)]
    Gen(Gen),
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Subcommand)]
enum Transform {
    /// Adjoin a fresh flexible atom to an integral algebra.
    AddFlexible { algebra: String },
    /// Reduce an algebra with a flexible atom to the integral case.
    Integralize { algebra: String },
}

#[derive(Subcommand)]
enum Gen {
    Network {
        algebra: String,
        #[arg(long, default_value_t = 4)]
        nodes: usize,
        #[arg(long, default_value_t = 1.0)]
        density: f64,
    },
    Algebra {
        #[arg(long, default_value_t = 4)]
        atoms: usize,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show { key: String },
}

struct Out {
    text: String,
    code: u8,
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn run(cli: &Cli) -> Result<Out> {
    let mut budget = Budget::nodes(cli.budget_nodes);
    if let Some(ms) = cli.timeout_ms {
        budget = budget.with_timeout(Duration::from_millis(ms));
    }
    let report_json = cli.format != Some(Format::Text);
    let artifact_json = cli.format == Some(Format::Json);
    let ok = |text| Out { text, code: 0 };
    let artifact = |text: String| -> Result<Out> {
        Ok(ok(if artifact_json {
            json(&serde_json::json!({ "text": text }))?
        } else {
            text
        }))
    };

    match &cli.command {
        Command::Validate { algebra } => {
            let report = load_algebra(algebra)?.validate();
            let text = if report_json {
                json(&report)?
            } else if report.ok {
                format!("{}: ok\n", report.algebra)
            } else {
                report
                    .violations
                    .iter()
                    .map(|v| format!("{}: {}\n", report.algebra, v.message))
                    .collect()
            };
            Ok(Out {
                text,
                code: if report.ok { 0 } else { 3 },
            })
        }
        Command::Analyze { algebra } => {
            let alg = load_algebra(algebra)?;
            let view = analyze(&alg).view(&alg);
            Ok(ok(if report_json {
                json(&view)?
            } else {
                format!(
                    "{}: symmetric={} integral={} flexible=[{}] in_scope={}\n",
                    view.algebra,
                    view.symmetric,
                    view.integral,
                    view.flexible_atoms.join(","),
                    view.in_theorem_scope
                )
            }))
        }
        Command::Classify { algebra, timing } => {
            let alg = load_algebra(algebra)?;
            let report = classify(
                &alg,
                ClassifyOptions {
                    budget,
                    record_timing: *timing,
                },
            )?;
            let text = if report_json {
                json(&report.view())?
            } else {
                report.summary()
            };
            let code = if report.verdict == ClassVerdict::Inconclusive {
                4
            } else {
                0
            };
            Ok(Out { text, code })
        }
        Command::Solve { algebra, network } => {
            let alg = load_algebra(algebra)?;
            let net = parse_network(&std::fs::read_to_string(network)?, &alg)?;
            let sol = solve(&alg, &net, budget)?;
            let view = sol.view(&alg, &net);
            let text = if report_json {
                json(&view)?
            } else {
                format!("{}: {:?}\n", view.network, view.verdict).to_lowercase()
            };
            let code = if sol.verdict == Verdict::Inconclusive {
                4
            } else {
                0
            };
            Ok(Out { text, code })
        }
        Command::Transform(t) => match t {
            Transform::AddFlexible { algebra } => {
                artifact(write_algebra(&add_flexible_atom(&load_algebra(algebra)?)?))
            }
            Transform::Integralize { algebra } => artifact(write_algebra(
                &integralize(&load_algebra(algebra)?)?.algebra,
            )),
        },
        Command::Gen(g) => match g {
            Gen::Network {
                algebra,
                nodes,
                density,
            } => {
                let alg = load_algebra(algebra)?;
                artifact(write_network(
                    &gen_network(&alg, *nodes, *density, cli.seed)?,
                    &alg,
                ))
            }
            Gen::Algebra { atoms } => artifact(write_algebra(&gen_algebra(*atoms, cli.seed)?)),
        },
        Command::Catalog(c) => match c {
            CatalogCmd::List => {
                let entries = catalog::entries();
                if report_json {
                    let list: Vec<_> = entries
                        .iter()
                        .map(|e| serde_json::json!({ "key": e.key, "provenance": e.provenance }))
                        .collect();
                    Ok(ok(json(&list)?))
                } else {
                    Ok(ok(entries
                        .iter()
                        .map(|e| format!("{}\t{}\n", e.key, e.provenance))
                        .collect()))
                }
            }
            CatalogCmd::Show { key } => artifact(write_algebra(&catalog::entry(key)?.algebra)),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text),
                None => std::io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Validation { report, .. } = &e {
                for v in &report.violations {
                    eprintln!("  {}", v.message);
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
