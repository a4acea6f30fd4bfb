//! Command-line surface: classify matrices or spectral specs, emit and
//! verify conjugating certificates, and print the partition atlas.
//!
//! Exit codes: 0 success (including negative classification verdicts),
//! 1 verification failure, 2 input or parse error, 3 negative verdict on a
//! witness request, 4 exactness refusal (spectrum outside ℚ(i) or a root
//! outside the scalar tower).

mod input;
mod run;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "adreal",
    about = "Classify real and strongly real adjoint orbits in sl(n,C) and sl(n,H), with exact conjugating certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    C,
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify an element as real / strongly real
    Classify {
        /// Input: a file path, inline JSON, or '-' for stdin
        input: Option<String>,
        /// Override the field tag of the document
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
        /// Comma-separated eigenvalue hints, e.g. "i,-i,1+2i"
        #[arg(long)]
        hint: Option<String>,
        /// Classify without insisting on trace zero
        #[arg(long)]
        gl_mode: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Classify every *.json file in a directory
        #[arg(long)]
        batch: Option<String>,
    },
    /// Construct a conjugating certificate g with gXg⁻¹ = -X, det g = 1
    Witness {
        input: Option<String>,
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
        #[arg(long)]
        hint: Option<String>,
        /// Require an involutive certificate (g² = I); without this flag
        /// an involutive certificate is still preferred when one exists
        #[arg(long)]
        strong: bool,
        #[arg(long)]
        gl_mode: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Verify a candidate certificate exactly
    Verify {
        /// Document with "x" and either "g" (plus optional "claims") or a
        /// full witness output
        input: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Partition census CSV: n, totals, and strongly-real nilpotent counts
    Atlas {
        /// Largest n to tabulate (at most 40)
        #[arg(long, default_value_t = 40)]
        bound: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Classify {
            input,
            field,
            hint,
            gl_mode,
            format,
            batch,
        } => run::classify(input, field, hint, gl_mode, format, batch),
        Command::Witness {
            input,
            field,
            hint,
            strong,
            gl_mode,
            format,
        } => run::witness(input, field, hint, strong, gl_mode, format),
        Command::Verify { input, format } => run::verify(input, format),
        Command::Atlas { bound } => run::atlas(bound),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

/// A failure with its exit code.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    pub fn negative_verdict(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    pub fn refusal(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}
