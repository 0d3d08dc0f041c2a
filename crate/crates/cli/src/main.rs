//! `orthofarkas <subcommand> <instance.json>`: decide an instance, re-verify
//! the answer, print a JSON result document.
//!
//! Exit codes: 0 positive decision, 1 negative decision, 2 input error,
//! 3 undecided or budget exhausted.

mod commands;
mod input;
mod render;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::Signed;
use orthofarkas::complex::RefinementBudget;
use orthofarkas::interval::DEFAULT_ORTHANT_BUDGET;
use orthofarkas::lattice::Rational;
use orthofarkas::Exec;
use serde_json::json;

use commands::{Failure, Outcome, Settings};
use input::Instance;
use render::ResultDocument;

#[derive(Parser)]
#[command(name = "orthofarkas", version, about = "Exact operator Farkas decisions on Q^m")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for randomized falsification.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Polygon sides for the complex certificate search (even, >= 4).
    #[arg(long, global = true, default_value_t = 8)]
    sides: usize,

    /// Finest modulus enclosure width, as "p/q" [default: 2^-128].
    #[arg(long, global = true)]
    precision: Option<String>,

    /// Largest column count for orthant enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ORTHANT_BUDGET)]
    orthant_budget: usize,

    /// Decide strata on a thread pool; output is unchanged.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Args)]
struct InputFile {
    /// Instance document (JSON).
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// B = sum alpha_k A_k with positive diagonal alpha_k, or a witness.
    Dominance(InputFile),
    /// Dominance with bounds u_k, v.
    Inhomogeneous(InputFile),
    /// Block form with an s x t grid of multipliers.
    Matrix(InputFile),
    /// Signed diagonal alpha with B = alpha A.
    Reconstruct(InputFile),
    /// Weak solvability over interval data.
    Interval(InputFile),
    /// Check a given complex certificate.
    ComplexVerify(InputFile),
    /// Search a complex certificate with polygonal moduli.
    ComplexSearch(InputFile),
    /// X with X A = B.
    Factor(InputFile),
    /// Entrywise nonnegative X with X A = B.
    FactorPositive(InputFile),
    /// Extreme-ray check of {c <= 0} ⊇ {Mx <= 0}.
    Oracle(InputFile),
}

type Runner = fn(&Instance, &Settings) -> Result<Outcome, Failure>;

impl Command {
    fn dispatch(&self) -> (&'static str, &InputFile, Runner) {
        match self {
            Command::Dominance(f) => ("dominance", f, commands::dominance),
            Command::Inhomogeneous(f) => ("inhomogeneous", f, commands::inhomogeneous),
            Command::Matrix(f) => ("matrix", f, commands::matrix),
            Command::Reconstruct(f) => ("reconstruct", f, commands::reconstruct_cmd),
            Command::Interval(f) => ("interval", f, commands::interval),
            Command::ComplexVerify(f) => ("complex-verify", f, commands::complex_verify),
            Command::ComplexSearch(f) => ("complex-search", f, commands::complex_search),
            Command::Factor(f) => ("factor", f, commands::factor),
            Command::FactorPositive(f) => ("factor-positive", f, commands::factor_positive_cmd),
            Command::Oracle(f) => ("oracle", f, commands::oracle),
        }
    }
}

fn settings(cli: &Cli) -> Result<Settings, Failure> {
    let budget = match &cli.precision {
        None => RefinementBudget::default(),
        Some(text) => {
            let finest: Rational = text
                .parse()
                .map_err(|e| Failure::Input(format!("--precision {text:?}: {e}")))?;
            if !finest.is_positive() {
                return Err(Failure::Input(format!("--precision must be positive, got {finest}")));
            }
            RefinementBudget { finest }
        }
    };
    Ok(Settings {
        seed: cli.seed,
        sides: cli.sides,
        budget,
        orthant_budget: cli.orthant_budget,
        exec: if cli.parallel { Exec::Parallel } else { Exec::Sequential },
    })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let (kind, file, runner) = cli.command.dispatch();
    let settings = settings(cli)?;
    let text = std::fs::read_to_string(&file.input)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", file.input.display())))?;
    let doc = Instance::parse(&text, kind)?;
    runner(&doc, &settings)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli).unwrap_or_else(|failure| {
        let (result, message, exit) = match failure {
            Failure::Input(msg) => ("error", msg, 2),
            Failure::Budget(msg) => ("undecided", msg, 3),
        };
        eprintln!("orthofarkas: {message}");
        Outcome {
            result,
            body: json!({ "message": message }),
            verified: false,
            exit,
        }
    });
    if matches!(outcome.result, "certificate" | "witness") && !outcome.verified {
        eprintln!("orthofarkas: re-verification failed");
    }
    let doc = ResultDocument {
        result: outcome.result,
        body: outcome.body,
        verified: outcome.verified,
        engine_version: format!("orthofarkas {}", env!("CARGO_PKG_VERSION")),
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("result documents serialize"));
    ExitCode::from(outcome.exit as u8)
}
