use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use entangle_cli::claims::Fault;
use entangle_cli::commands::{self, exit, BasisKind, CliError};
use entangle_cli::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Entanglement measures for small multi-qubit states.
#[derive(Debug, Parser)]
#[command(name = "entangle", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Rescale state files to unit norm instead of rejecting them.
    #[arg(long, global = true)]
    normalize: bool,

    /// Bipartition override, e.g. `a:0,2` (subsystem A) or `b:3` (subsystem B).
    #[arg(long, global = true, value_name = "SIDE:IDX,...")]
    split: Option<String>,

    /// Write the report to a file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Measure the entanglement of states read from state files.
    Analyze {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// List a basis with amplitudes and translation phases.
    Basis {
        #[arg(value_enum)]
        kind: BasisKind,
        /// Number of qubits.
        #[arg(short = 'n', long = "qubits", default_value_t = 2)]
        n: usize,
    },
    /// Superpose Bell or diagram states with equal weights and classify the result.
    Classify {
        /// `Phi+`, `Phi-`, `Psi+`, `Psi-` or `p=<bits>,s=<+|->`.
        #[arg(required = true, allow_hyphen_values = true)]
        labels: Vec<String>,
    },
    /// Rerun every reproduced numeric claim and report pass/fail per claim.
    VerifyPaper {
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
}

fn emit(report: &Report, format: Format, output: Option<&PathBuf>) -> Result<(), CliError> {
    let rendered = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    match output {
        Some(path) => std::fs::write(path, rendered).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (report, code) = match &cli.command {
        Command::Analyze { paths } => (
            commands::cmd_analyze(paths, cli.split.as_deref(), cli.normalize)?,
            exit::OK,
        ),
        Command::Basis { kind, n } => (commands::cmd_basis(*kind, *n)?, exit::OK),
        Command::Classify { labels } => (commands::cmd_classify(labels)?, exit::OK),
        Command::VerifyPaper { inject_fault } => {
            let (report, ok) = commands::cmd_verify_paper(*inject_fault);
            (report, if ok { exit::OK } else { exit::CLAIM_FAILURE })
        }
    };
    emit(&report, cli.format, cli.output.as_ref())?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
