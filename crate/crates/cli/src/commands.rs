//! The four subcommands, as pure functions from parsed inputs to the text
//! they print. File reading and flag handling live in `main`.

use std::cmp::Ordering;
use std::fmt::Write;

use neutrorank::{
    rank_ivn, rank_svn, IvnTriplet, RankOrdering, RealInterval, Scalar, SvnTriplet, UnitInterval,
};

use crate::dataset::{Dataset, Format, Payload};
use crate::error::CliError;
use crate::literal::{parse_interval, parse_triplet, TripletLiteral};
use crate::report::{format_scalar, RankReport};

/// How `rank` renders its report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Table,
    Json,
}

/// Rank a dataset and render the report.
pub fn cmd_rank<S: Scalar>(
    backend: &'static str,
    text: &str,
    format: Format,
    output: Output,
) -> Result<String, CliError> {
    let dataset = Dataset::<S>::parse(text, format)?;
    if dataset.is_empty() {
        return Err(CliError::EmptyInput);
    }
    let kind = dataset.kind().expect("dataset is nonempty");

    let all_degenerate = dataset.records().iter().all(|record| match &record.payload {
        Payload::Interval(x) => x.is_degenerate(),
        Payload::SingleValued(_) => false,
    });
    let note = (kind == "interval" && all_degenerate).then(|| {
        "every component interval is a single point, so this ranking coincides with \
         the single-valued ranking of the collapsed triplets"
            .to_string()
    });

    let records = dataset.into_records();
    let report = if kind == "single-valued" {
        let items = records
            .into_iter()
            .map(|record| match record.payload {
                Payload::SingleValued(x) => (record.id, x),
                Payload::Interval(_) => unreachable!("dataset kinds are homogeneous"),
            })
            .collect();
        RankReport::new(backend, kind, rank_svn(items)?, note)
    } else {
        let items = records
            .into_iter()
            .map(|record| match record.payload {
                Payload::Interval(x) => (record.id, x),
                Payload::SingleValued(_) => unreachable!("dataset kinds are homogeneous"),
            })
            .collect();
        RankReport::new(backend, kind, rank_ivn(items)?, note)
    };

    Ok(match output {
        Output::Table => report.render_table(),
        Output::Json => report.render_json(),
    })
}

/// Compare two literals of the same kind, tracing the cascade.
pub fn cmd_compare<S: Scalar>(x_text: &str, y_text: &str) -> Result<String, CliError> {
    let x = parse_triplet::<S>(x_text)?;
    let y = parse_triplet::<S>(y_text)?;
    match (x, y) {
        (TripletLiteral::SingleValued(x), TripletLiteral::SingleValued(y)) => {
            let mut out = String::new();
            let _ = writeln!(out, "x = {}", show_svn(&x));
            let _ = writeln!(out, "y = {}", show_svn(&y));
            trace(
                &mut out,
                &[
                    ("score", x.score(), y.score()),
                    ("accuracy", x.accuracy(), y.accuracy()),
                    ("certainty", x.certainty(), y.certainty()),
                ],
            );
            let _ = writeln!(out, "result: {}", describe(x.compare(&y)));
            Ok(out)
        }
        (TripletLiteral::Interval(x), TripletLiteral::Interval(y)) => {
            let mut out = String::new();
            let _ = writeln!(out, "x = {}", show_ivn(&x));
            let _ = writeln!(out, "y = {}", show_ivn(&y));
            trace(
                &mut out,
                &[
                    ("score", x.fs_score(), y.fs_score()),
                    ("accuracy", x.fs_accuracy(), y.fs_accuracy()),
                    ("certainty", x.fs_certainty(), y.fs_certainty()),
                ],
            );
            let _ = writeln!(out, "result: {}", describe(x.compare(&y)));
            Ok(out)
        }
        (x, y) => Err(CliError::MixedKinds(format!(
            "cannot compare a {} literal with an {} literal",
            x.kind(),
            y.kind()
        ))),
    }
}

/// Possibility degrees of two intervals, both directions, with the midpoint
/// verdict as a cross-check.
pub fn cmd_possibility<S: Scalar>(a_text: &str, b_text: &str) -> Result<String, CliError> {
    let a = parse_interval::<S>(a_text)?;
    let b = parse_interval::<S>(b_text)?;
    let ab = a.possibility_degree(&b);
    let ba = b.possibility_degree(&a);
    let sum = ab.clone() + ba.clone();

    let mut out = String::new();
    let _ = writeln!(
        out,
        "A = {}  midpoint {}",
        show_interval(&a),
        format_scalar(&a.midpoint())
    );
    let _ = writeln!(
        out,
        "B = {}  midpoint {}",
        show_interval(&b),
        format_scalar(&b.midpoint())
    );
    let _ = writeln!(out, "P(A >= B) = {}", format_scalar(&ab));
    let _ = writeln!(out, "P(B >= A) = {}", format_scalar(&ba));
    let _ = writeln!(out, "sum = {}", format_scalar(&sum));
    let _ = writeln!(
        out,
        "midpoint verdict: {}",
        describe_intervals(a.compare_by_midpoint(&b))
    );
    Ok(out)
}

/// Evaluate every quality function that applies to the literal.
pub fn cmd_score<S: Scalar>(text: &str) -> Result<String, CliError> {
    let mut out = String::new();
    match parse_triplet::<S>(text)? {
        TripletLiteral::SingleValued(x) => {
            let _ = writeln!(out, "triplet = {}", show_svn(&x));
            for (name, value) in [
                ("score", x.score()),
                ("accuracy", x.accuracy()),
                ("certainty", x.certainty()),
                ("negative score", x.negative_score()),
                ("extended accuracy", x.extended_accuracy()),
            ] {
                let _ = writeln!(out, "{name:<17} = {}", format_scalar(&value));
            }
        }
        TripletLiteral::Interval(x) => {
            let _ = writeln!(out, "triplet = {}", show_ivn(&x));
            let _ = writeln!(out, "scalar family");
            for (name, value) in [
                ("score", x.fs_score()),
                ("accuracy", x.fs_accuracy()),
                ("certainty", x.fs_certainty()),
            ] {
                let _ = writeln!(out, "  {name:<9} = {}", format_scalar(&value));
            }
            let _ = writeln!(out, "interval family");
            for (name, value) in [
                ("score", x.zhang_score()),
                ("accuracy", x.zhang_accuracy()),
                ("certainty", x.zhang_certainty().into()),
            ] {
                let _ = writeln!(out, "  {name:<9} = {}", show_real(&value));
            }
        }
    }
    Ok(out)
}

/// Write one line per stage, stopping at the stage that decides.
fn trace<S: Scalar>(out: &mut String, stages: &[(&str, S, S)]) {
    for (index, (name, x, y)) in stages.iter().enumerate() {
        let verdict = match x.cmp_total(y) {
            Ordering::Equal => "tie",
            _ => "decides",
        };
        let _ = writeln!(
            out,
            "stage {} {}: {} vs {}, {}",
            index + 1,
            name,
            format_scalar(x),
            format_scalar(y),
            verdict
        );
        if verdict == "decides" {
            return;
        }
    }
}

fn describe(verdict: RankOrdering) -> String {
    match verdict {
        RankOrdering::Greater => "Greater (x ranks above y)".into(),
        RankOrdering::Less => "Less (x ranks below y)".into(),
        RankOrdering::Identical => "Identical (x and y are the same triplet)".into(),
        RankOrdering::NeutroEqual => {
            "NeutroEqual (x and y tie without being the same triplet)".into()
        }
    }
}

fn describe_intervals(verdict: RankOrdering) -> String {
    match verdict {
        RankOrdering::Greater => "Greater (A ranks above B)".into(),
        RankOrdering::Less => "Less (A ranks below B)".into(),
        RankOrdering::Identical => "Identical (A and B are the same interval)".into(),
        RankOrdering::NeutroEqual => {
            "NeutroEqual (A and B share a midpoint without being the same interval)".into()
        }
    }
}

fn show_svn<S: Scalar>(x: &SvnTriplet<S>) -> String {
    format!(
        "({}, {}, {})",
        format_scalar(x.t()),
        format_scalar(x.i()),
        format_scalar(x.f())
    )
}

fn show_ivn<S: Scalar>(x: &IvnTriplet<S>) -> String {
    format!(
        "({}, {}, {})",
        show_interval(x.t()),
        show_interval(x.i()),
        show_interval(x.f())
    )
}

fn show_interval<S: Scalar>(x: &UnitInterval<S>) -> String {
    format!("[{}, {}]", format_scalar(x.lo()), format_scalar(x.hi()))
}

fn show_real<S: Scalar>(x: &RealInterval<S>) -> String {
    format!("[{}, {}]", format_scalar(x.lo()), format_scalar(x.hi()))
}
