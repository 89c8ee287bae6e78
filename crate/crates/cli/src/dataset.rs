//! Dataset files: parsing and emission of alternative records in CSV and
//! JSON form.
//!
//! CSV needs one of two exact header rows:
//!
//! ```text
//! id,t,i,f                    single-valued rows   a,0.6,0.2,0.3
//! id,tL,tU,iL,iU,fL,fU        interval rows        b,0.4,0.5,0.2,0.3,0.3,0.4
//! ```
//!
//! JSON is a top-level array of objects keyed `id`, `t`, `i`, `f`. Components
//! are numbers (single-valued), two-element arrays (intervals), or subset
//! descriptions `{"points": [...], "intervals": [[..], ..]}`. Subset records
//! are hulled to interval triplets while loading.
//!
//! A file must stick to one payload kind throughout, and ids must be unique.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use neutrorank::{IvnTriplet, Scalar, SubsetTriplet, SvnTriplet, UnitInterval, UnitSubset};
use serde_json::{Map, Number, Value};

use crate::error::CliError;

const SVN_HEADER: [&str; 4] = ["id", "t", "i", "f"];
const IVN_HEADER: [&str; 7] = ["id", "tL", "tU", "iL", "iU", "fL", "fU"];

/// On-disk encoding of a dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Infer the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

/// What one record grades its components with.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload<S> {
    SingleValued(SvnTriplet<S>),
    Interval(IvnTriplet<S>),
}

impl<S> Payload<S> {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::SingleValued(_) => "single-valued",
            Payload::Interval(_) => "interval",
        }
    }
}

/// One alternative: a label and its triplet.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternativeRecord<S> {
    pub id: String,
    pub payload: Payload<S>,
}

/// A parsed, validated dataset. All records share one payload kind.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset<S> {
    records: Vec<AlternativeRecord<S>>,
}

impl<S: Scalar> Dataset<S> {
    /// Validate uniqueness of ids and homogeneity of payload kinds.
    pub fn new(records: Vec<AlternativeRecord<S>>) -> Result<Self, CliError> {
        let mut seen = HashSet::new();
        for record in &records {
            if record.id.is_empty() {
                return Err(CliError::Parse("record with empty id".into()));
            }
            if !seen.insert(record.id.clone()) {
                return Err(CliError::DuplicateId(record.id.clone()));
            }
        }
        if let Some(first) = records.first() {
            for record in &records {
                if record.payload.kind() != first.payload.kind() {
                    return Err(CliError::MixedKinds(format!(
                        "{:?} is {} but {:?} is {}",
                        first.id,
                        first.payload.kind(),
                        record.id,
                        record.payload.kind()
                    )));
                }
            }
        }
        Ok(Dataset { records })
    }

    pub fn records(&self) -> &[AlternativeRecord<S>] {
        &self.records
    }

    pub fn into_records(self) -> Vec<AlternativeRecord<S>> {
        self.records
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// The shared payload kind, when there is at least one record.
    pub fn kind(&self) -> Option<&'static str> {
        self.records.first().map(|r| r.payload.kind())
    }

    pub fn parse(text: &str, format: Format) -> Result<Self, CliError> {
        match format {
            Format::Csv => Self::parse_csv(text),
            Format::Json => Self::parse_json(text),
        }
    }

    pub fn emit(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Csv => self.emit_csv(),
            Format::Json => self.emit_json(),
        }
    }

    pub fn parse_csv(text: &str) -> Result<Self, CliError> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let headers = reader
            .headers()
            .map_err(|e| CliError::Parse(e.to_string()))?
            .clone();
        let interval = if headers.iter().eq(SVN_HEADER) {
            false
        } else if headers.iter().eq(IVN_HEADER) {
            true
        } else {
            return Err(CliError::Parse(format!(
                "unrecognized CSV header {:?}; expected {:?} or {:?}",
                headers.iter().collect::<Vec<_>>().join(","),
                SVN_HEADER.join(","),
                IVN_HEADER.join(",")
            )));
        };

        let mut records = Vec::new();
        for row in reader.records() {
            let row = row.map_err(|e| CliError::Parse(e.to_string()))?;
            let line = row.position().map_or(0, |p| p.line());
            let at = |message: &dyn fmt::Display| format!("{message} (line {line})");
            let field = |index: usize| -> Result<S, CliError> {
                let name = headers.get(index).unwrap_or("?");
                S::parse_decimal(&row[index])
                    .map_err(|e| CliError::Parse(at(&format_args!("field {name}: {e}"))))
            };
            let id = row[0].to_string();
            if id.is_empty() {
                return Err(CliError::Parse(at(&"empty id")));
            }
            let payload = if interval {
                let component = |lo: usize| -> Result<UnitInterval<S>, CliError> {
                    UnitInterval::new(field(lo)?, field(lo + 1)?)
                        .map_err(|e| CliError::Domain(at(&format_args!("record {id:?}: {e}"))))
                };
                Payload::Interval(IvnTriplet::new(component(1)?, component(3)?, component(5)?))
            } else {
                Payload::SingleValued(
                    SvnTriplet::new(field(1)?, field(2)?, field(3)?)
                        .map_err(|e| CliError::Domain(at(&format_args!("record {id:?}: {e}"))))?,
                )
            };
            records.push(AlternativeRecord { id, payload });
        }
        Dataset::new(records)
    }

    pub fn parse_json(text: &str) -> Result<Self, CliError> {
        let root: Value =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let Value::Array(items) = root else {
            return Err(CliError::Parse("top level must be an array".into()));
        };

        let mut records = Vec::new();
        let mut raw_kind: Option<&'static str> = None;
        for (index, item) in items.iter().enumerate() {
            let Value::Object(object) = item else {
                return Err(CliError::Parse(format!(
                    "record {index} must be an object"
                )));
            };
            for key in object.keys() {
                if !SVN_HEADER.contains(&key.as_str()) {
                    return Err(CliError::Parse(format!(
                        "record {index} has unknown key {key:?}"
                    )));
                }
            }
            let id = match object.get("id") {
                Some(Value::String(id)) if !id.is_empty() => id.clone(),
                Some(_) => {
                    return Err(CliError::Parse(format!(
                        "record {index}: id must be a nonempty string"
                    )))
                }
                None => return Err(CliError::Parse(format!("record {index} has no id"))),
            };
            let component = |name: &str| -> Result<RawComponent<S>, CliError> {
                let value = object.get(name).ok_or_else(|| {
                    CliError::Parse(format!("record {id:?} has no {name:?}"))
                })?;
                RawComponent::read(value)
                    .map_err(|message| CliError::Parse(format!("record {id:?}, {name}: {message}")))
            };
            let (t, i, f) = (component("t")?, component("i")?, component("f")?);
            if t.kind() != i.kind() || i.kind() != f.kind() {
                return Err(CliError::MixedKinds(format!(
                    "record {id:?} grades t as {}, i as {}, f as {}",
                    t.kind(),
                    i.kind(),
                    f.kind()
                )));
            }
            match raw_kind {
                None => raw_kind = Some(t.kind()),
                Some(kind) if kind != t.kind() => {
                    return Err(CliError::MixedKinds(format!(
                        "dataset mixes {kind} and {} records",
                        t.kind()
                    )))
                }
                Some(_) => {}
            }
            let domain =
                |e: neutrorank::DomainError| CliError::Domain(format!("record {id:?}: {e}"));
            let payload = match (t, i, f) {
                (RawComponent::Point(t), RawComponent::Point(i), RawComponent::Point(f)) => {
                    Payload::SingleValued(SvnTriplet::new(t, i, f).map_err(domain)?)
                }
                (
                    RawComponent::Pair(t),
                    RawComponent::Pair(i),
                    RawComponent::Pair(f),
                ) => {
                    let interval = |(lo, hi): (S, S)| UnitInterval::new(lo, hi).map_err(domain);
                    Payload::Interval(IvnTriplet::new(
                        interval(t)?,
                        interval(i)?,
                        interval(f)?,
                    ))
                }
                (
                    RawComponent::Subset(t),
                    RawComponent::Subset(i),
                    RawComponent::Subset(f),
                ) => {
                    let subset = |(points, pairs): SubsetParts<S>| {
                        let intervals = pairs
                            .into_iter()
                            .map(|(lo, hi)| UnitInterval::new(lo, hi))
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(domain)?;
                        UnitSubset::new(points, intervals).map_err(domain)
                    };
                    let triplet = SubsetTriplet::new(subset(t)?, subset(i)?, subset(f)?);
                    Payload::Interval(triplet.hull())
                }
                _ => unreachable!("component kinds checked above"),
            };
            records.push(AlternativeRecord { id, payload });
        }
        Dataset::new(records)
    }

    pub fn emit_csv(&self) -> Result<String, CliError> {
        let mut out = String::new();
        let interval = self.kind() == Some("interval");
        out.push_str(&if interval {
            IVN_HEADER.join(",")
        } else {
            SVN_HEADER.join(",")
        });
        out.push('\n');
        for record in &self.records {
            out.push_str(&record.id);
            let mut push = |value: &S| -> Result<(), CliError> {
                out.push(',');
                out.push_str(&decimal(value)?);
                Ok(())
            };
            match &record.payload {
                Payload::SingleValued(x) => {
                    push(x.t())?;
                    push(x.i())?;
                    push(x.f())?;
                }
                Payload::Interval(x) => {
                    for part in [x.t(), x.i(), x.f()] {
                        push(part.lo())?;
                        push(part.hi())?;
                    }
                }
            }
            out.push('\n');
        }
        Ok(out)
    }

    pub fn emit_json(&self) -> Result<String, CliError> {
        let mut items = Vec::new();
        for record in &self.records {
            let mut object = Map::new();
            object.insert("id".into(), Value::String(record.id.clone()));
            match &record.payload {
                Payload::SingleValued(x) => {
                    for (name, value) in [("t", x.t()), ("i", x.i()), ("f", x.f())] {
                        object.insert(name.into(), number(value)?);
                    }
                }
                Payload::Interval(x) => {
                    for (name, value) in [("t", x.t()), ("i", x.i()), ("f", x.f())] {
                        object.insert(
                            name.into(),
                            Value::Array(vec![number(value.lo())?, number(value.hi())?]),
                        );
                    }
                }
            }
            items.push(Value::Object(object));
        }
        let mut text = serde_json::to_string_pretty(&Value::Array(items))
            .expect("serialization of plain values cannot fail");
        text.push('\n');
        Ok(text)
    }
}

type SubsetParts<S> = (Vec<S>, Vec<(S, S)>);

/// One JSON component value, before domain validation.
enum RawComponent<S> {
    Point(S),
    Pair((S, S)),
    Subset(SubsetParts<S>),
}

impl<S: Scalar> RawComponent<S> {
    fn kind(&self) -> &'static str {
        match self {
            RawComponent::Point(_) => "single-valued",
            RawComponent::Pair(_) => "interval",
            RawComponent::Subset(_) => "subset",
        }
    }

    fn read(value: &Value) -> Result<Self, String> {
        match value {
            Value::Number(n) => Ok(RawComponent::Point(scalar(n)?)),
            Value::Array(_) => Ok(RawComponent::Pair(pair(value)?)),
            Value::Object(fields) => {
                for key in fields.keys() {
                    if key != "points" && key != "intervals" {
                        return Err(format!("unknown subset key {key:?}"));
                    }
                }
                let points = match fields.get("points") {
                    None => Vec::new(),
                    Some(Value::Array(values)) => values
                        .iter()
                        .map(|v| match v {
                            Value::Number(n) => scalar(n),
                            _ => Err("points must be numbers".into()),
                        })
                        .collect::<Result<_, _>>()?,
                    Some(_) => return Err("points must be an array".into()),
                };
                let intervals = match fields.get("intervals") {
                    None => Vec::new(),
                    Some(Value::Array(values)) => {
                        values.iter().map(pair).collect::<Result<_, _>>()?
                    }
                    Some(_) => return Err("intervals must be an array".into()),
                };
                Ok(RawComponent::Subset((points, intervals)))
            }
            _ => Err("must be a number, a two-element array, or a subset object".into()),
        }
    }
}

fn scalar<S: Scalar>(n: &Number) -> Result<S, String> {
    S::parse_decimal(&n.to_string()).map_err(|e| e.to_string())
}

fn pair<S: Scalar>(value: &Value) -> Result<(S, S), String> {
    let Value::Array(items) = value else {
        return Err("interval must be a two-element array".into());
    };
    match items.as_slice() {
        [Value::Number(lo), Value::Number(hi)] => Ok((scalar(lo)?, scalar(hi)?)),
        _ => Err("interval must hold exactly two numbers".into()),
    }
}

/// Finite decimal form of a value, erring on values that have none (possible
/// only for rationals built outside the decimal parser).
fn decimal<S: Scalar>(value: &S) -> Result<String, CliError> {
    value
        .decimal_string()
        .ok_or_else(|| CliError::Domain(format!("{value} has no finite decimal form")))
}

fn number<S: Scalar>(value: &S) -> Result<Value, CliError> {
    let text = decimal(value)?;
    let n: Number = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{text:?} is not a JSON number: {e}")))?;
    Ok(Value::Number(n))
}
