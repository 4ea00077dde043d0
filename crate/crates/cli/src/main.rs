use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use cyclic_trace_cli::{
    cmd_certify, cmd_compare, cmd_enumerate, cmd_gram, exit, Format, Outcome, DEFAULT_SEED,
    DEFAULT_TRIALS,
};

#[derive(Parser)]
#[command(name = "cyclic-trace", version, about = "Integral trace forms of tame cyclic number fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical Gram matrix and invariants of a field.
    Gram {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Decide whether two fields have isometric trace forms (exit 3 if not).
    Compare { a: PathBuf, b: PathBuf },
    /// Check the canonical matrix against Gauss-period traces in random realizations.
    Certify {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = parse_trials)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// List every field of a degree up to a conductor bound, one JSON line each.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[arg(long = "max-conductor", value_parser = clap::value_parser!(u64).range(1..))]
        max_conductor: u64,
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = parse_trials)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn parse_trials(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("need at least one trial".into()),
        Ok(k) => Ok(k),
        Err(e) => Err(e.to_string()),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gram { spec, format } => {
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
                FormatArg::Latex => Format::Latex,
            };
            cmd_gram(&spec, format)
        }
        Command::Compare { a, b } => cmd_compare(&a, &b),
        Command::Certify { spec, trials, seed } => cmd_certify(&spec, trials, seed),
        Command::Enumerate {
            degree,
            max_conductor,
            certify,
            trials,
            seed,
        } => cmd_enumerate(degree, max_conductor, certify.then_some((trials, seed))),
    }
}

fn main() -> ExitCode {
    let outcome = match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            // exit 2 is reserved for spec validation
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => exit::OK,
                _ => exit::IO_OR_PARSE,
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
