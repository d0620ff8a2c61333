//! Front end for the `bw`, `amf` and `emf` binaries.
//!
//! Each tool parses its flags with clap, runs one subcommand into a
//! [`Report`], and renders that report as JSON, CSV or text. Exit status is
//! 0 when every check passes, 1 when a check fails or a computation errors,
//! and 2 for invalid flags or parameters.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser};
use modring::Scalar;
use serde::Serialize;

pub mod amf;
pub mod bw;
pub mod emf;
pub mod report;

pub use report::{CheckRecord, Format, Report, Status};

#[derive(Args, Clone, Debug, Serialize)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized spot checks; without it no randomness is used.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug)]
pub enum CliError {
    /// A parameter that parsed but is out of range.
    Invalid(String),
    Compute(modring::Error),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid parameter: {m}"),
            CliError::Compute(e) => write!(f, "computation failed: {e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<modring::Error> for CliError {
    fn from(e: modring::Error) -> Self {
        CliError::Compute(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn invalid<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Invalid(msg.into()))
}

pub fn strings<S: Scalar>(xs: &[S]) -> Vec<String> {
    xs.iter().map(Scalar::to_canonical).collect()
}

/// A parsed command line for one of the tools.
pub trait Tool: Parser + Serialize {
    const NAME: &'static str;
    fn global(&self) -> &GlobalArgs;
    fn run(&self) -> CliResult<Report>;
}

/// The configuration echo: the parsed flags minus the output destination.
pub fn config_echo<T: Serialize>(cli: &T) -> serde_json::Value {
    let mut v = serde_json::to_value(cli).expect("flags serialize");
    if let Some(g) = v.get_mut("global").and_then(|g| g.as_object_mut()) {
        g.remove("out");
    }
    v
}

fn emit(report: &Report, global: &GlobalArgs) -> std::io::Result<()> {
    let text = report.render(global.format);
    match &global.out {
        Some(path) => fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

/// Parse, run, render, and map the outcome to an exit status.
pub fn main_for<T: Tool>() -> ExitCode {
    let cli = T::parse();
    match cli.run() {
        Ok(report) => {
            if let Err(e) = emit(&report, cli.global()) {
                eprintln!("{}: {}", T::NAME, CliError::Io(e));
                return ExitCode::from(1);
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}: {} check(s) failed", T::NAME, report.failures());
                ExitCode::from(1)
            }
        }
        Err(CliError::Invalid(m)) => {
            let mut cmd = T::command();
            eprintln!("error: {m}\n\n{}", cmd.render_usage());
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("{}: {e}", T::NAME);
            ExitCode::from(1)
        }
    }
}
