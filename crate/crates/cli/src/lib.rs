//! Command-line front end for the `neutrorank` ranking library: dataset
//! parsing (CSV and JSON), triplet literals, rank reports with equality
//! classes, and the subcommand implementations behind the `neutrorank`
//! binary.

pub mod commands;
pub mod dataset;
pub mod error;
pub mod literal;
pub mod report;

pub use commands::{cmd_compare, cmd_possibility, cmd_rank, cmd_score, Output};
pub use dataset::{AlternativeRecord, Dataset, Format, Payload};
pub use error::CliError;
pub use literal::{parse_interval, parse_triplet, TripletLiteral};
pub use report::{format_scalar, EqualityClass, RankReport, ReportEntry};
