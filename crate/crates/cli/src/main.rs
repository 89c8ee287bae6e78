use std::fs;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use neutrorank::Rational;
use neutrorank_cli::commands::{cmd_compare, cmd_possibility, cmd_rank, cmd_score, Output};
use neutrorank_cli::dataset::Format;
use neutrorank_cli::error::CliError;

#[derive(Parser)]
#[command(
    name = "neutrorank",
    version,
    about = "Rank alternatives graded by neutrosophic (t, i, f) triplets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the alternatives in a dataset file
    Rank {
        /// Dataset file, CSV or JSON
        file: PathBuf,
        /// Input format; inferred from the file extension when omitted
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Report rendering
        #[arg(long, value_enum, default_value_t = OutputArg::Table)]
        output: OutputArg,
        /// Arithmetic backend
        #[arg(long, value_enum, default_value_t = BackendArg::Rational)]
        backend: BackendArg,
    },
    /// Compare two triplet literals, tracing the decision cascade
    Compare {
        /// Left operand, e.g. "(0.6,0.1,0.3)" or "([0.4,0.5],[0.2,0.3],[0.3,0.4])"
        x: String,
        /// Right operand, same kind as the left
        y: String,
        /// Arithmetic backend
        #[arg(long, value_enum, default_value_t = BackendArg::Rational)]
        backend: BackendArg,
    },
    /// Possibility degrees for two intervals, in both directions
    Possibility {
        /// First interval, e.g. "[0.4,0.7]"
        a: String,
        /// Second interval
        b: String,
        /// Arithmetic backend
        #[arg(long, value_enum, default_value_t = BackendArg::Rational)]
        backend: BackendArg,
    },
    /// Evaluate every applicable quality function on one literal
    Score {
        /// Triplet literal of either kind
        triplet: String,
        /// Arithmetic backend
        #[arg(long, value_enum, default_value_t = BackendArg::Rational)]
        backend: BackendArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(arg: FormatArg) -> Format {
        match arg {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum OutputArg {
    Table,
    Json,
}

impl From<OutputArg> for Output {
    fn from(arg: OutputArg) -> Output {
        match arg {
            OutputArg::Table => Output::Table,
            OutputArg::Json => Output::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum BackendArg {
    Rational,
    Float,
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Rank {
            file,
            format,
            output,
            backend,
        } => {
            let format = match format {
                Some(arg) => arg.into(),
                None => Format::from_path(&file).ok_or_else(|| {
                    CliError::Parse(format!(
                        "cannot infer a format from {}; pass --format",
                        file.display()
                    ))
                })?,
            };
            let text = fs::read_to_string(&file)?;
            match backend {
                BackendArg::Rational => {
                    cmd_rank::<Rational>("rational", &text, format, output.into())
                }
                BackendArg::Float => cmd_rank::<f64>("float", &text, format, output.into()),
            }
        }
        Command::Compare { x, y, backend } => match backend {
            BackendArg::Rational => cmd_compare::<Rational>(&x, &y),
            BackendArg::Float => cmd_compare::<f64>(&x, &y),
        },
        Command::Possibility { a, b, backend } => match backend {
            BackendArg::Rational => cmd_possibility::<Rational>(&a, &b),
            BackendArg::Float => cmd_possibility::<f64>(&a, &b),
        },
        Command::Score { triplet, backend } => match backend {
            BackendArg::Rational => cmd_score::<Rational>(&triplet),
            BackendArg::Float => cmd_score::<f64>(&triplet),
        },
    }
}

fn main() {
    match run(Cli::parse()) {
        Ok(text) => print!("{text}"),
        Err(error) => {
            eprintln!("error: {error}");
            process::exit(error.exit_code());
        }
    }
}
