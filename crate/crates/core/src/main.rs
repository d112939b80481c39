//! Command-line interface: reproduce the reference tables, run theorem
//! verifiers, query single graphs, and print extremal witnesses.
//!
//! Exit codes: 0 all checks pass, 1 a recomputed value failed a check,
//! 2 usage or input error.

use clap::{Parser, Subcommand, ValueEnum};
use spectral_rank::report::{cmd_extremal, cmd_query, cmd_table, cmd_verify, OutputFormat};
use spectral_rank::Error;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "spectral-rank",
    version,
    about = "Spectral radii of low-rank graphs: blow-up families, exact roots, extremal search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(value: FormatArg) -> OutputFormat {
        match value {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyTarget {
    Theorem1,
    Theorem2,
    Lemmas,
    Identities,
}

impl VerifyTarget {
    fn as_str(self) -> &'static str {
        match self {
            VerifyTarget::Theorem1 => "theorem1",
            VerifyTarget::Theorem2 => "theorem2",
            VerifyTarget::Lemmas => "lemmas",
            VerifyTarget::Identities => "identities",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Recompute a reference table (1-4) and compare against bundled values.
    Table {
        /// Table id: 1 (balanced families), 2 (k-family), 3 (per-family
        /// minimizers), 4 (i-line with alpha).
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Override the per-cell comparison tolerance.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run a verifier: theorem1 | theorem2 | lemmas | identities.
    Verify {
        target: VerifyTarget,
        /// Largest order to sweep (defaults: 6, 6, 20, 40).
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Inspect one graph: graph6 string, family spec "BASE:n1,n2,...", or
    /// catalog id (e.g. K3, G10).
    Query {
        input: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Print the minimum-radius rank-5 graph of order n with its
    /// certificates.
    Extremal {
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

/// Usage/input errors exit 2; failed numeric checks and internal computation
/// failures exit 1.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidComposition(_)
        | Error::LengthMismatch { .. }
        | Error::UnknownGraphId(_)
        | Error::Graph6(_)
        | Error::VertexOutOfRange { .. }
        | Error::InvalidEdge { .. }
        | Error::EdgeAbsent { .. }
        | Error::RotationPrecondition(_)
        | Error::Disconnected
        | Error::NonUnitVector { .. }
        | Error::InvalidPartition(_)
        | Error::OrderTooLarge { .. }
        | Error::InvalidArgument(_) => 2,
        Error::ConvergenceFailure { .. }
        | Error::NotEquitable { .. }
        | Error::NoRealRoot
        | Error::ZeroPolynomial
        | Error::GoldenData(_)
        | Error::Internal(_) => 1,
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let (text, pass) = match cli.command {
        Command::Table { id, format, tol } => {
            let report = cmd_table(id, tol)?;
            (report.render(format.into()), report.pass)
        }
        Command::Verify { target, n_max, format } => {
            let report = cmd_verify(target.as_str(), n_max)?;
            (report.render(format.into()), report.pass)
        }
        Command::Query { input, format } => {
            let report = cmd_query(&input)?;
            (report.render(format.into()), report.pass)
        }
        Command::Extremal { n, format } => {
            let report = cmd_extremal(n)?;
            (report.render(format.into()), report.pass)
        }
    };
    print!("{text}");
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("one or more checks failed");
            ExitCode::from(1)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
