use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use permspec::matrix::{self, MatrixFormat};
use permspec::spectrum;
use permspec::{verify, Options, Target};
use permspec_core::algebra::MATRIX_MAX_N;
use permspec_core::spectral::DEFAULT_SEED;
use permspec_core::StatisticKind;

const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "permspec", version, about = "Exact spectra and counting lemmas for descent and inversion operators on S_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks for one target and print a JSON report.
    Verify {
        /// theorem1, theorem2, corollary1..3, prop2.1, prop3.3, prop4.8,
        /// lemma2.3 .. lemma4.7, crossval or all
        target: Target,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Report every wall_time_ms as 0 so output is reproducible.
        #[arg(long)]
        no_timing: bool,
        /// Raise the ceiling on n for the slow targets.
        #[arg(long)]
        allow_slow: bool,
    },
    /// Print eigenvalues with their verified multiplicities.
    Spectrum {
        #[arg(long)]
        stat: Stat,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Write the n! x n! matrix in lexicographic order.
    Matrix {
        #[arg(long)]
        stat: Stat,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        format: MatrixFormat,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Stat {
    Des,
    Maj,
    Inv,
    Desx,
    Invx,
}

impl From<Stat> for StatisticKind {
    fn from(s: Stat) -> Self {
        match s {
            Stat::Des => StatisticKind::Des,
            Stat::Maj => StatisticKind::Maj,
            Stat::Inv => StatisticKind::Inv,
            Stat::Desx => StatisticKind::DesX,
            Stat::Invx => StatisticKind::InvX,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("PERMSPEC_THREADS") else { return Ok(()) };
    let threads: usize = raw.trim().parse().map_err(|_| format!("PERMSPEC_THREADS must be a positive integer, got {raw:?}"))?;
    if threads == 0 {
        return Err("PERMSPEC_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("permspec: {msg}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        return fail(USAGE, e);
    }
    match cli.command {
        Command::Verify { target, n, seed, no_timing, allow_slow } => {
            let opts = Options { n, seed, timing: !no_timing, allow_slow };
            match verify(target, &opts) {
                Ok(report) => {
                    println!("{}", report.to_json());
                    ExitCode::from(report.exit_code() as u8)
                }
                Err(e) => fail(USAGE, e),
            }
        }
        Command::Spectrum { stat, n, format, seed } => {
            let kind = StatisticKind::from(stat);
            let max = spectrum::max_n(kind);
            if n == 0 || n > max {
                return fail(USAGE, format!("spectrum of {kind} accepts 1 <= n <= {max}, got n = {n}"));
            }
            match spectrum::spectrum(kind, n, seed) {
                Ok(s) => {
                    match format {
                        TextFormat::Text => print!("{}", s.to_text()),
                        TextFormat::Json => println!("{}", serde_json::to_string_pretty(&s).expect("serializes")),
                    }
                    if s.ok() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail(1, e),
            }
        }
        Command::Matrix { stat, n, format, out } => {
            if n == 0 || n > MATRIX_MAX_N {
                return fail(USAGE, format!("matrix export accepts 1 <= n <= {MATRIX_MAX_N}, got n = {n}"));
            }
            let text = match matrix::render(stat.into(), n, format) {
                Ok(t) => t,
                Err(e) => return fail(1, e),
            };
            match std::fs::write(&out, text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(1, format!("cannot write {}: {e}", out.display())),
            }
        }
    }
}
