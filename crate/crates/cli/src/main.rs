//! `qhslab`: runs the hidden subgroup experiments and emits versioned JSON run records.

mod commands;
mod error;
mod record;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use error::{CliError, CliResult};
use record::RunRecord;

#[derive(Parser, Debug)]
#[command(
    name = "qhslab",
    version,
    about = "Exact simulation of quantum hidden subgroup algorithms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the output here instead of stdout. Nothing is written if the run fails validation.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "subcommand", rename_all = "lowercase")]
enum Command {
    /// Complete irreducible representation set of S_N or Z_Q, with orthogonality checks.
    Irreps(IrrepsArgs),
    /// Exact QRand outcome distribution of an instance, optionally with seeded samples.
    Qrand(QrandArgs),
    /// Shor's factoring loop with a per-round log.
    Shor(ShorArgs),
    /// Grover search on 2^n labels.
    Grover(GroverArgs),
    /// The no-information experiments for the Grover oracle.
    Noinfo(NoinfoArgs),
}

#[derive(Args, Debug, Serialize)]
#[group(required = true, multiple = false)]
struct GroupChoice {
    /// The symmetric group S_N.
    #[arg(long, value_name = "N")]
    sym: Option<usize>,
    /// The cyclic group Z_Q.
    #[arg(long, value_name = "Q")]
    cyclic: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
struct IrrepsArgs {
    #[command(flatten)]
    group: GroupChoice,
    /// Include every representation matrix in the output.
    #[arg(long)]
    tables: bool,
}

#[derive(Args, Debug, Serialize)]
#[command(group = clap::ArgGroup::new("instance_source").required(true).multiple(false))]
struct QrandArgs {
    /// Grover's HSP on S_N (needs --j0).
    #[arg(long, value_name = "N", group = "instance_source")]
    grover_sym: Option<usize>,
    /// The search oracle f(j) = [j = j0] on Z_N (needs --j0).
    #[arg(long, value_name = "N", group = "instance_source")]
    grover_cyclic: Option<usize>,
    /// Shor's HSP on Z_Q for modulus N (needs --base).
    #[arg(long, value_name = "N", group = "instance_source")]
    shor: Option<u64>,
    /// The constant oracle on the group given by --cyclic or --sym.
    #[arg(long, group = "instance_source")]
    constant: bool,
    /// An instance JSON file: {"group": {...}, "oracle": [...], "hidden"?: [...], "target_size"?: n}.
    #[arg(long, value_name = "FILE", group = "instance_source")]
    instance: Option<PathBuf>,
    #[arg(long)]
    j0: Option<usize>,
    #[arg(long, value_name = "A")]
    base: Option<u64>,
    #[arg(long, value_name = "Q", requires = "constant", conflicts_with = "sym")]
    cyclic: Option<usize>,
    #[arg(long, value_name = "N", requires = "constant")]
    sym: Option<usize>,
    #[arg(long, env = "QHSLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Number of seeded draws to report alongside the exact distribution.
    #[arg(long)]
    shots: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
struct ShorArgs {
    /// Odd composite modulus, not a prime power.
    #[serde(rename = "N")]
    n: u64,
    #[arg(long, env = "QHSLAB_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    rounds: usize,
}

#[derive(Args, Debug, Serialize)]
struct GroverArgs {
    /// Number of qubits; the search space has 2^n labels.
    #[arg(long = "n", value_name = "QUBITS")]
    qubits: u32,
    #[arg(long)]
    j0: usize,
    #[arg(long, default_value_t = 0)]
    shots: usize,
    #[arg(long, env = "QHSLAB_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug, Serialize)]
struct NoinfoArgs {
    #[command(flatten)]
    group: GroupChoice,
    /// Omit the per-j0 full distributions, keeping marginals and deviations.
    #[arg(long)]
    summary: bool,
}

fn emit(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn run(cli: &Cli) -> CliResult<bool> {
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Irreps(args) => commands::irreps(args, cli.format)?,
        Command::Qrand(args) => commands::qrand(args, cli.format)?,
        Command::Shor(args) => commands::shor(args, cli.format)?,
        Command::Grover(args) => commands::grover(args, cli.format)?,
        Command::Noinfo(args) => commands::noinfo(args, cli.format)?,
    };
    let timing_ms = start.elapsed().as_secs_f64() * 1e3;
    let passed = outcome.all_passed();
    for check in outcome.checks.iter().filter(|c| !c.passed) {
        eprintln!("claim check failed: {}: {}", check.claim, check.detail);
    }
    let text = match outcome.csv {
        Some(ref csv) => csv.clone(),
        None => {
            let config = serde_json::to_value(&cli.command).expect("arguments serialize");
            let record = RunRecord::new(config, timing_ms, outcome);
            let mut s = serde_json::to_string_pretty(&record).expect("record serializes");
            s.push('\n');
            s
        }
    };
    emit(cli.out.as_ref(), &text)?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
