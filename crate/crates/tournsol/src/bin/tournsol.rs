//! Thin command-line wrapper; all logic lives in the library.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use tournsol::cli::{self, CliError, InputSource, OutputFormat};
use tournsol::gen::{GenSpec, Kind};

#[derive(Parser)]
#[command(
    name = "tournsol",
    about = "Tournament and majority-relation solution concepts via Boolean matrix formulas",
    version
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute solution concepts for an instance
    Solve {
        /// Instance file (line format, or JSON when it starts with '{')
        #[arg(long, conflicts_with = "fixture")]
        input: Option<PathBuf>,
        /// Built-in instance name ("paper")
        #[arg(long)]
        fixture: Option<String>,
        /// "all" or a comma list like CW,UC1,MD,SP2
        #[arg(long, default_value = "all")]
        concepts: String,
        /// Degree for bare k-family selectors (P, SP, S, SS)
        #[arg(long)]
        k: Option<usize>,
        /// Output format: text or structured
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Generate an instance file on stdout
    Gen {
        /// tournament, weak, transitive, cycle, or fixture
        #[arg(long)]
        kind: String,
        /// Alternative count (ignored for fixture)
        #[arg(long)]
        n: Option<usize>,
        /// Tie probability for the weak kind
        #[arg(long, default_value_t = 0.0)]
        tie_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-validate formulas against reference implementations on seeded
    /// random instances
    Check {
        /// Instances per (kind, size) pair
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Size or inclusive range, e.g. 6 or 3..8
        #[arg(long, default_value = "3..8")]
        n: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the formula path on seeded random tournaments
    Bench {
        /// Comma list of sizes
        #[arg(long, default_value = "64,256,512")]
        sizes: String,
        /// Repetitions per measurement; the minimum is reported
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

fn run(args: Args) -> Result<ExitCode, CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.command {
        Command::Solve {
            input,
            fixture,
            concepts,
            k,
            format,
        } => {
            let source = match (input, fixture) {
                (Some(path), None) => InputSource::Path(path),
                (None, Some(name)) => InputSource::Fixture(name),
                (None, None) => {
                    return Err(CliError::Usage(
                        "solve needs --input FILE or --fixture NAME".into(),
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            let format = OutputFormat::parse(&format)?;
            cli::solve_command(&source, &concepts, k, format, &mut out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            kind,
            n,
            tie_prob,
            seed,
        } => {
            let kind = Kind::parse(&kind).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown kind {kind:?}; want tournament, weak, transitive, cycle, or fixture"
                ))
            })?;
            let n = match (kind, n) {
                (Kind::Fixture, _) => 6,
                (_, Some(n)) => n,
                (_, None) => return Err(CliError::Usage("gen needs --n".into())),
            };
            let spec = GenSpec {
                n,
                kind,
                tie_prob,
                seed,
            };
            cli::gen_command(&spec, &mut out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { trials, n, seed } => {
            let (lo, hi) = cli::parse_size_range(&n)?;
            let outcome = cli::check_command(trials, lo, hi, seed, &mut out)?;
            if outcome.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Bench { sizes, reps } => {
            let sizes = cli::parse_sizes(&sizes)?;
            cli::bench_command(&sizes, reps, &mut out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(args) {
        Ok(code) => code,
        Err(err) => {
            // Usage and parse trouble exit 1; property failures exit 2 via
            // the check outcome above.
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
