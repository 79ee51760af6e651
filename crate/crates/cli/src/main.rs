mod enumerate;
mod show;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use thiserror::Error;

#[derive(Parser)]
#[command(name = "updown", version, about = "Oscillating tableaux, Sundaram's bijection and symplectic descent sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List oscillating tableaux, standard tableaux or symplectic LR tableaux.
    Enumerate(enumerate::EnumerateArgs),
    /// Trace Sundaram's bijection on one oscillating tableau.
    Sundaram(show::TableauArgs),
    /// Run Roby's growth-diagram construction on one oscillating tableau.
    Roby(show::TableauArgs),
    /// Draw a growth diagram as text.
    RenderGrowth(show::RenderArgs),
    /// Check an identity over a range of instances.
    Verify(verify::VerifyArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Ascii,
}

#[derive(Args, Clone, Copy)]
pub struct FormatArg {
    /// json: one JSON object per line; ascii: aligned text.
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] updown::Error),
    #[error("invalid JSON for {what}: {source}")]
    Json {
        what: &'static str,
        #[source]
        source: serde_json::Error,
    },
}

pub type CliResult<T> = Result<T, CliError>;

pub fn parse_json<T: DeserializeOwned>(what: &'static str, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|source| CliError::Json { what, source })
}

pub fn json_line<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Enumerate(args) => enumerate::run(&args).map(|_| true),
        Command::Sundaram(args) => show::sundaram(&args).map(|_| true),
        Command::Roby(args) => show::roby(&args).map(|_| true),
        Command::RenderGrowth(args) => show::render(&args).map(|_| true),
        Command::Verify(args) => verify::run(&args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
