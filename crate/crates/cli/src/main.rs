use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use circlebundles::verify::Scope;
use circlebundles_cli::{self as cli, CliError, Format, Outcome};
use clap::{Parser, Subcommand};

/// Classify equivariant real vector bundles over a circle.
#[derive(Parser)]
#[command(name = "circlebundles", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the bundles for an input document.
    Classify {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        m_bound: Option<usize>,
    },
    /// Print the complex and real character tables of G and of the kernel H.
    Chartable {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run the invariant suites over the built-in groups.
    Check {
        /// Include groups up to order 64.
        #[arg(long)]
        full: bool,
    },
    /// Compare closed-form counts with brute-force enumeration for m up to a bound.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

fn load(file: &Path, format: Option<Format>) -> Result<cli::InputSpec, CliError> {
    let mut spec = cli::read_input(file)?;
    if let Some(f) = format {
        spec.format = f;
    }
    Ok(spec)
}

fn dispatch(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Classify {
            file,
            format,
            m_bound,
        } => {
            let mut spec = load(&file, format)?;
            if let Some(m) = m_bound {
                if !(1..=cli::input::MAX_M_BOUND).contains(&m) {
                    return Err(CliError::Input(format!(
                        "--m-bound must lie in 1..={}",
                        cli::input::MAX_M_BOUND
                    )));
                }
                spec.m_bound = m;
            }
            cli::classify_command(&spec)
        }
        Command::Chartable { file, format } => cli::chartable_command(&load(&file, format)?),
        Command::Check { full } => Ok(cli::run_selfcheck(if full {
            Scope::Full
        } else {
            Scope::Fast
        })),
        Command::Enumerate { file, m, format } => cli::enumerate_command(&load(&file, format)?, m),
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match dispatch(args.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("circlebundles: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
