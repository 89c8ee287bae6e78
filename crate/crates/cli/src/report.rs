//! Rank reports: the table and JSON renderings of a ranking run.

use neutrorank::{RankedEntry, Scalar, TieKind};
use serde_json::{Map, Value};

/// Exact decimal where one exists, otherwise the exact fraction with a
/// rounded reading aid, e.g. `11/15 (~0.733333)`.
pub fn format_scalar<S: Scalar>(value: &S) -> String {
    match value.decimal_string() {
        Some(text) => text,
        None => format!("{value} (~{:.6})", value.to_f64()),
    }
}

/// One ranked alternative, values already formatted for display.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportEntry {
    pub rank: usize,
    pub id: String,
    pub score: String,
    pub accuracy: String,
    pub certainty: String,
    pub class: Option<TieKind>,
}

/// Ids sharing one rank, with the flavor of the tie.
#[derive(Debug, Clone, PartialEq)]
pub struct EqualityClass {
    pub rank: usize,
    pub ids: Vec<String>,
    pub class: TieKind,
}

/// The result of ranking one dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct RankReport {
    pub backend: &'static str,
    pub kind: &'static str,
    pub entries: Vec<ReportEntry>,
    pub classes: Vec<EqualityClass>,
    pub note: Option<String>,
}

impl RankReport {
    pub fn new<S: Scalar>(
        backend: &'static str,
        kind: &'static str,
        ranked: Vec<RankedEntry<String, S>>,
        note: Option<String>,
    ) -> Self {
        let entries: Vec<ReportEntry> = ranked
            .into_iter()
            .map(|entry| ReportEntry {
                rank: entry.rank,
                id: entry.label,
                score: format_scalar(&entry.key.score),
                accuracy: format_scalar(&entry.key.accuracy),
                certainty: format_scalar(&entry.key.certainty),
                class: entry.tie,
            })
            .collect();

        let mut classes = Vec::new();
        let mut at = 0;
        while at < entries.len() {
            let run = entries[at..]
                .iter()
                .take_while(|e| e.rank == entries[at].rank)
                .count();
            if let Some(class) = entries[at].class {
                classes.push(EqualityClass {
                    rank: entries[at].rank,
                    ids: entries[at..at + run].iter().map(|e| e.id.clone()).collect(),
                    class,
                });
            }
            at += run;
        }

        RankReport {
            backend,
            kind,
            entries,
            classes,
            note,
        }
    }

    /// Plain-text table with aligned columns, equality classes, and note.
    pub fn render_table(&self) -> String {
        let header = ["rank", "id", "score", "accuracy", "certainty", "class"];
        let rows: Vec<[String; 6]> = self
            .entries
            .iter()
            .map(|e| {
                [
                    e.rank.to_string(),
                    e.id.clone(),
                    e.score.clone(),
                    e.accuracy.clone(),
                    e.certainty.clone(),
                    e.class.map_or(String::new(), |c| c.label().to_string()),
                ]
            })
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|col| {
                rows.iter()
                    .map(|row| row[col].len())
                    .chain([header[col].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let mut out = String::new();
        let mut line = |cells: &[&str]| {
            let mut text = String::new();
            for (col, cell) in cells.iter().enumerate() {
                if col > 0 {
                    text.push_str("  ");
                }
                if col == 0 {
                    text.push_str(&format!("{cell:>width$}", width = widths[col]));
                } else {
                    text.push_str(&format!("{cell:<width$}", width = widths[col]));
                }
            }
            out.push_str(text.trim_end());
            out.push('\n');
        };
        line(&header);
        for row in &rows {
            let cells: Vec<&str> = row.iter().map(String::as_str).collect();
            line(&cells);
        }

        for class in &self.classes {
            out.push_str(&format!(
                "rank {}: {} ({})\n",
                class.rank,
                class.ids.join(", "),
                class.class.label()
            ));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }

    /// Machine-readable rendering. Key order is fixed, so equal reports
    /// render byte-identically.
    pub fn render_json(&self) -> String {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let mut object = Map::new();
                object.insert("rank".into(), e.rank.into());
                object.insert("id".into(), Value::String(e.id.clone()));
                object.insert("score".into(), Value::String(e.score.clone()));
                object.insert("accuracy".into(), Value::String(e.accuracy.clone()));
                object.insert("certainty".into(), Value::String(e.certainty.clone()));
                object.insert(
                    "equality_class".into(),
                    e.class
                        .map_or(Value::Null, |c| Value::String(c.label().to_string())),
                );
                Value::Object(object)
            })
            .collect();
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|class| {
                let mut object = Map::new();
                object.insert("rank".into(), class.rank.into());
                object.insert(
                    "ids".into(),
                    Value::Array(class.ids.iter().cloned().map(Value::String).collect()),
                );
                object.insert(
                    "equality_class".into(),
                    Value::String(class.class.label().to_string()),
                );
                Value::Object(object)
            })
            .collect();

        let mut root = Map::new();
        root.insert("backend".into(), Value::String(self.backend.into()));
        root.insert("kind".into(), Value::String(self.kind.into()));
        root.insert("entries".into(), Value::Array(entries));
        root.insert("equality_classes".into(), Value::Array(classes));
        if let Some(note) = &self.note {
            root.insert("note".into(), Value::String(note.clone()));
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(root))
            .expect("serialization of plain values cannot fail");
        text.push('\n');
        text
    }
}
