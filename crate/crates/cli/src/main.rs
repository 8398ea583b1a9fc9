//! `waring-eig`: Waring ranks, loci and eigenschemes from the command line.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use waring_eig::apolarity::Mode;
use waring_eig::suite::Selector;

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Parser, Serialize, Debug)]
#[command(name = "waring-eig", version, about = "Waring ranks, Waring loci and eigenschemes of symmetric tensors")]
pub struct Cli {
    /// Exact arithmetic (default) or floating point.
    #[arg(long, value_enum, default_value_t = ModeArg::Exact, global = true)]
    pub mode: ModeArg,
    /// Tolerance for numeric decisions.
    #[arg(long, default_value_t = 1e-9, global = true)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    #[command(subcommand)]
    #[serde(flatten)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Exact,
    Numeric,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Numeric => Mode::Numeric,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Json,
    Text,
}

/// A form given inline or read from a file.
#[derive(clap::Args, Serialize, Debug, Clone)]
pub struct FormInput {
    /// Form expression, e.g. "x^3 + y^3 + (x+y)^3" or "x0^2*x1*x2".
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    pub expr: Option<String>,
    /// Read the expression from a file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(tag = "verb", rename_all = "kebab-case")]
pub enum Command {
    /// Degree, essential variables, rank, annihilator, eigenscheme, loci and W ∩ Eig.
    Analyze(FormInput),
    /// Eigenpolynomial and eigenpoints (binary), or the eigen ideal.
    Eigen(FormInput),
    /// Waring or forbidden locus.
    Locus(FormInput),
    /// Decide whether W(F) ∩ Eig(F) is empty.
    Intersect(FormInput),
    /// Ranks along the pencil F + λ·L^d.
    Perturb {
        #[command(flatten)]
        #[serde(flatten)]
        input: FormInput,
        /// Linear form L, e.g. "x + 2*y".
        #[arg(long)]
        direction: String,
    },
    /// Sample a point of the critical Waring variety with x0 as eigenvector.
    WeSample {
        /// Ambient projective dimension (forms in n + 1 variables).
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        /// Number of summands, including x0^d.
        #[arg(short = 'r', long = "rank", default_value_t = 3)]
        r: usize,
        #[arg(short = 'd', long = "degree", default_value_t = 5)]
        d: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Membership of a binary form in the critical Waring variety.
    WeCheck(FormInput),
    /// Run the acceptance suite.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        suite: Selector,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

impl Command {
    fn verb(&self) -> &'static str {
        match self {
            Command::Analyze(_) => "analyze",
            Command::Eigen(_) => "eigen",
            Command::Locus(_) => "locus",
            Command::Intersect(_) => "intersect",
            Command::Perturb { .. } => "perturb",
            Command::WeSample { .. } => "we-sample",
            Command::WeCheck(_) => "we-check",
            Command::VerifyPaper { .. } => "verify-paper",
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("WARING_EIG_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("WARING_EIG_THREADS must be a positive integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let outcome = commands::run(&cli);
    let elapsed = start.elapsed().as_secs_f64();
    let echo = serde_json::to_value(&cli).unwrap_or_default();
    match outcome {
        Ok(out) => {
            match cli.output {
                Output::Json => {
                    let report = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": echo,
                        "results": out.results,
                        "certificates": out.certificates,
                        "timing": { "elapsed_secs": elapsed },
                        "ok": out.ok,
                    });
                    emit(&(serde_json::to_string_pretty(&report).expect("plain data") + "\n"));
                }
                Output::Text => emit(&out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.output {
                Output::Json => {
                    let report = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": echo,
                        "error": render::error(&e),
                        "timing": { "elapsed_secs": elapsed },
                        "ok": false,
                    });
                    emit(&(serde_json::to_string_pretty(&report).expect("plain data") + "\n"));
                }
                Output::Text => eprintln!("error ({}): {e}", cli.command.verb()),
            }
            ExitCode::from(2)
        }
    }
}
