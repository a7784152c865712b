use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use vertexcalc::battery::BatteryOptions;
use vertexcalc::report::{merge, Envelope, SuiteReport};
use vertexcalc::suites::{self, Config, Suite};
use vertexcalc::tabulate::{tabulate, to_csv, Table};
use vertexcalc_core::fock::{evaluate_at_one, llt_canonical_basis};

/// Exact computations of blocks, decomposition numbers and vertices for
/// Hecke algebras of symmetric groups at roots of unity.
#[derive(Parser)]
#[command(name = "vertexcalc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Block, cuspidal-support or predicted-vertex tables.
    Tabulate {
        what: Table,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// The LLT decomposition matrix.
    Decmat {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        /// Evaluate entries at v = 1.
        #[arg(long)]
        at_one: bool,
        /// Also compare with Specht heads and characters computed in H_q(S_n).
        #[arg(long)]
        check_gram: bool,
        #[command(flatten)]
        guard: GuardArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        /// Orders of q; repeat for several. Defaults to 2 and 3.
        #[arg(long)]
        e: Vec<usize>,
        /// Skip modules above this dimension.
        #[arg(long, default_value_t = 24)]
        max_dim: usize,
        /// Also scan Specht modules with local endomorphism rings.
        #[arg(long)]
        spechts: bool,
        /// Also scan induced simples, restricted projective simples and H itself.
        #[arg(long)]
        extended: bool,
        /// Run the decmat suite without the Hecke-side comparison.
        #[arg(long)]
        no_gram: bool,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Wrap the report with its wall-clock duration.
        #[arg(long)]
        envelope: bool,
        #[command(flatten)]
        guard: GuardArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Operations on saved reports.
    Report {
        #[command(subcommand)]
        command: ReportCommand,
    },
}

#[derive(Subcommand)]
enum ReportCommand {
    /// Merge suite reports into one aggregate.
    Merge {
        files: Vec<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GuardArgs {
    /// Raise the size guard of module-level computations.
    #[arg(long, env = "VERTEXCALC_MAX_N")]
    max_n: Option<usize>,
}

const USAGE: u8 = 2;

enum Failure {
    Usage(String),
    Verification,
}

impl Output {
    fn emit(&self, text: &str) -> Result<(), Failure> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn check_guard(n: usize, default: usize, hard: usize, max_n: Option<usize>) -> Result<(), Failure> {
    let limit = max_n.unwrap_or(default);
    if limit > hard {
        return Err(Failure::Usage(format!("the size guard cannot exceed {hard}")));
    }
    if n > limit {
        return Err(Failure::Usage(format!("n = {n} exceeds the size guard {limit}; raise it with --max-n")));
    }
    Ok(())
}

fn core_err(e: vertexcalc_core::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("json output")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Tabulate { what, n, e, format, out } => {
            let t = tabulate(n, e, what).map_err(core_err)?;
            out.emit(&match format {
                Format::Json => pretty(&t.json),
                Format::Csv => to_csv(&t),
            })
        }
        Command::Decmat { n, e, at_one, check_gram, guard, out } => {
            let g = Suite::Decmat.guard();
            if check_gram {
                check_guard(n, g.default, g.hard, guard.max_n)?;
            } else {
                check_guard(n, 12, 16, None)?;
            }
            let d = llt_canonical_basis(n, e).map_err(core_err)?;
            let mut body = if at_one {
                vertexcalc::json::integer_matrix(&d, &evaluate_at_one(&d))
            } else {
                vertexcalc::json::decomposition_matrix(&d)
            };
            let mut failed = false;
            if check_gram {
                let report = suites::run(Suite::Decmat, &Config::new(n, vec![e])).map_err(core_err)?;
                failed = !report.passed();
                body["check"] = serde_json::to_value(&report).expect("report json");
            }
            out.emit(&pretty(&body))?;
            if failed {
                Err(Failure::Verification)
            } else {
                Ok(())
            }
        }
        Command::Verify { suite, n, e, max_dim, spechts, extended, no_gram, jobs, envelope, guard, out } => {
            let g = suite.guard();
            check_guard(n, g.default, g.hard, guard.max_n)?;
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build_global()
                    .map_err(|err| Failure::Usage(err.to_string()))?;
            }
            let es = if e.is_empty() { vec![2, 3] } else { e };
            if let Some(&bad) = es.iter().find(|&&x| x < 2) {
                return Err(Failure::Usage(format!("e = {bad} must be at least 2")));
            }
            let cfg = Config {
                n,
                es,
                battery: BatteryOptions { spechts, extended, max_dim },
                check_gram: !no_gram,
            };
            let start = Instant::now();
            let report = suites::run(suite, &cfg).map_err(core_err)?;
            let failed = !report.passed();
            if envelope {
                let env = Envelope { report, duration_seconds: start.elapsed().as_secs_f64() };
                out.emit(&pretty(&env))?;
            } else {
                out.emit(&report.to_json())?;
                eprintln!("{} finished in {:.2}s", suite.name(), start.elapsed().as_secs_f64());
            }
            if failed {
                Err(Failure::Verification)
            } else {
                Ok(())
            }
        }
        Command::Report { command: ReportCommand::Merge { files, out } } => {
            let mut reports = Vec::new();
            for f in &files {
                let text = fs::read_to_string(f).map_err(|err| Failure::Usage(format!("{}: {err}", f.display())))?;
                let v: Value = serde_json::from_str(&text).map_err(|err| Failure::Usage(format!("{}: {err}", f.display())))?;
                let inner = if v.get("report").is_some() { v["report"].clone() } else { v };
                let r: SuiteReport =
                    serde_json::from_value(inner).map_err(|err| Failure::Usage(format!("{}: {err}", f.display())))?;
                reports.push(r);
            }
            match merge(reports) {
                Ok(agg) => {
                    out.emit(&pretty(&agg))?;
                    if agg.status == vertexcalc::Status::Fail {
                        Err(Failure::Verification)
                    } else {
                        Ok(())
                    }
                }
                Err(collision) => {
                    eprintln!("{collision}");
                    Err(Failure::Verification)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}
