//! Command-line front end: each subcommand reads a JSON job config and
//! prints a report, as text by default or as JSON with `--json`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use polyserial::cli::{self, CommandKind, Options};
use polyserial::css::GrayMap;
use polyserial::{Error, Result};

#[derive(Parser)]
#[command(name = "polyserial", version, about = "Polycyclic codes over finite serial rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Job {
    /// Path to the JSON job config.
    #[arg(long)]
    config: PathBuf,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Enumeration budget for exhaustive steps.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    /// Gray map for code-info distances: "phi" or "ashraf4".
    #[arg(long)]
    gray: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Chain-component decomposition of the coefficient ring.
    Decompose(Job),
    /// Size, rank, freeness, and minimum distance of a code.
    CodeInfo(Job),
    /// Euclidean and annihilator dual generators.
    Dual(Job),
    /// Self-dual / self-orthogonal / dual-containing / LCD classification.
    Classify(Job),
    /// Gram matrix of the ambient algebra.
    Gram(Job),
    /// Stabilizer code parameters from a dual-containing pair.
    Css(Job),
    /// Number of polycyclic codes for a square-free relation.
    CountCodes(Job),
    /// Enumerate monic divisor codes and classify each.
    SearchSelfdual(Job),
}

impl Command {
    fn split(&self) -> (CommandKind, &Job) {
        match self {
            Command::Decompose(j) => (CommandKind::Decompose, j),
            Command::CodeInfo(j) => (CommandKind::CodeInfo, j),
            Command::Dual(j) => (CommandKind::Dual, j),
            Command::Classify(j) => (CommandKind::Classify, j),
            Command::Gram(j) => (CommandKind::Gram, j),
            Command::Css(j) => (CommandKind::Css, j),
            Command::CountCodes(j) => (CommandKind::CountCodes, j),
            Command::SearchSelfdual(j) => (CommandKind::SearchSelfdual, j),
        }
    }
}

fn run(kind: CommandKind, job: &Job) -> Result<String> {
    let raw = std::fs::read_to_string(&job.config).map_err(|e| {
        Error::InvalidInput(format!("cannot read {}: {e}", job.config.display()))
    })?;
    let cfg = cli::validate(&raw, kind)?;
    let gray = job.gray.as_deref().map(GrayMap::parse).transpose()?;
    let opts = Options { budget: job.budget, gray };
    let report = cli::run(kind, &cfg, &opts)?;
    if job.json {
        serde_json::to_string_pretty(&report)
            .map_err(|e| Error::Internal(format!("report serialization failed: {e}")))
    } else {
        Ok(cli::render_text(&report))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, job) = cli.command.split();
    match run(kind, job) {
        Ok(text) => {
            println!("{}", text.trim_end());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
