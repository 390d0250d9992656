use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use forest_poset::forest::enumerate_forests;
use forest_poset::interval::interval;
use forest_poset::tree::enumerate_trees;
use forest_poset::{labels, Forest};
use forest_poset_cli::report::{self, Method};
use forest_poset_cli::{dot, export, verify};
use serde_json::json;

/// Posets of leaf-labeled binary forests.
#[derive(Parser)]
#[command(name = "forest-poset", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial, exponents, Möbius number and the M, Z and
    /// cardinal polynomials of the interval [LOWER, UPPER].
    Invariants {
        lower: String,
        upper: String,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        #[arg(long)]
        json: bool,
        /// Include wall-clock timings (output is no longer reproducible).
        #[arg(long)]
        timings: bool,
        /// Print the recursive decomposition used by the fast method.
        #[arg(long)]
        trace: bool,
    },
    /// Hasse diagram of [LOWER, UPPER].
    Hasse {
        lower: String,
        upper: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Run the verification suite up to the given number of labels.
    Verify {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(2..=6))]
        max_labels: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Intervals (or pairs) drawn per sampled check at 6 labels.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// List every tree or forest on the given labels.
    Enumerate {
        /// Comma-separated labels.
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<String>,
        #[arg(long, value_enum, default_value_t = What::Forests)]
        what: What,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Trees,
    Forests,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<forest_poset::Error> for Failure {
    fn from(e: forest_poset::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_pair(lower: &str, upper: &str) -> Result<(Forest, Forest), Failure> {
    let parse = |role: &str, text: &str| {
        text.parse::<Forest>()
            .map_err(|e| Failure::Usage(format!("{role} forest {text:?}: {e}")))
    };
    Ok((parse("lower", lower)?, parse("upper", upper)?))
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Invariants {
            lower,
            upper,
            method,
            json,
            timings,
            trace,
        } => {
            let (lower, upper) = parse_pair(&lower, &upper)?;
            let report = report::run(&lower, &upper, method, timings, trace)?;
            let out = if json {
                pretty(&report.to_json())
            } else {
                report.to_text()
            };
            if report.agrees() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Verification(
                    "fast and brute-force results differ".into(),
                ))
            }
        }
        Command::Hasse {
            lower,
            upper,
            format,
        } => {
            let (lower, upper) = parse_pair(&lower, &upper)?;
            let iv = interval(&lower, &upper)?;
            Ok(match format {
                Format::Dot => dot::hasse(&iv),
                Format::Json => pretty(&export::interval(&iv)),
            })
        }
        Command::Verify {
            max_labels,
            seed,
            samples,
            json,
        } => {
            let checks = verify::run_suite(max_labels as usize, seed, samples);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let out = if json {
                pretty(&json!({
                    "max_labels": max_labels,
                    "seed": seed,
                    "samples": samples,
                    "passed": failed == 0,
                    "checks": checks,
                }))
            } else {
                let mut out: String = checks.iter().map(|c| format!("{c}\n")).collect();
                out.push_str(&format!(
                    "{} of {} checks passed\n",
                    checks.len() - failed,
                    checks.len()
                ));
                out
            };
            if failed == 0 {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Verification(format!("{failed} checks failed")))
            }
        }
        Command::Enumerate {
            labels: names,
            what,
            json,
        } => {
            let ground = labels(&names)?;
            let (items, noun): (Vec<Forest>, &str) = match what {
                What::Trees => (
                    enumerate_trees(&ground)?
                        .into_iter()
                        .map(Forest::from_tree)
                        .collect(),
                    "trees",
                ),
                What::Forests => (enumerate_forests(&ground)?, "forests"),
            };
            Ok(if json {
                let listed: Vec<_> = items
                    .iter()
                    .map(|f| json!({ "text": f.to_string(), "nested": export::forest(f) }))
                    .collect();
                pretty(
                    &json!({ "what": noun, "labels": names, "count": items.len(), "items": listed }),
                )
            } else {
                let mut out: String = items.iter().map(|f| format!("{f}\n")).collect();
                out.push_str(&format!("{} {noun}\n", items.len()));
                out
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
