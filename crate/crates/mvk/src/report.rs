//! Flat key/value records and their line and JSON renderings.

use serde::ser::{Serialize, SerializeMap, Serializer};
use std::fmt;

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Human-readable report.
    Text,
    /// One `key=value ..` record per line.
    Line,
    /// One JSON object per line with the same fields.
    JsonLines,
}

/// A field value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    /// Rendered as is.
    Str(String),
    /// Integer.
    Int(u64),
    /// Boolean.
    Bool(bool),
    /// Comma-joined in line form, an array in JSON.
    List(Vec<u64>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Str(s) => f.write_str(s),
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::List(v) => f.write_str(&v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Str(v) => s.serialize_str(v),
            Value::Int(v) => s.serialize_u64(*v),
            Value::Bool(v) => s.serialize_bool(*v),
            Value::List(v) => v.serialize(s),
        }
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Str(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Str(v)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as u64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<Vec<usize>> for Value {
    fn from(v: Vec<usize>) -> Self {
        Value::List(v.into_iter().map(|x| x as u64).collect())
    }
}

/// Ordered fields.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record(pub Vec<(&'static str, Value)>);

impl Record {
    /// Empty record.
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a field.
    pub fn field(mut self, key: &'static str, v: impl Into<Value>) -> Self {
        self.0.push((key, v.into()));
        self
    }

    /// Field value by key.
    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    /// Renders in line or JSON form; text falls back to line form.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::JsonLines => serde_json::to_string(self).expect("records serialize"),
            _ => self.0.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "),
        }
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// Pads columns to equal width; the first column is left-aligned, the rest
/// right-aligned.
pub fn align(rows: &[Vec<String>]) -> String {
    align_with(rows, true)
}

/// Pads columns to equal width, all left-aligned unless `right` is set for
/// columns after the first.
pub fn align_with(rows: &[Vec<String>], right: bool) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| {
                let pad = " ".repeat(width[c] - s.chars().count());
                if c == 0 || !right {
                    format!("{s}{pad}")
                } else {
                    format!("{pad}{s}")
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renderings() {
        let r = Record::new().field("scheme", "12").field("tuple", vec![0usize, 1, 2, 3]).field("col", 4u64).field("ok", true);
        assert_eq!(r.render(Format::Line), "scheme=12 tuple=0,1,2,3 col=4 ok=true");
        assert_eq!(r.render(Format::JsonLines), r#"{"scheme":"12","tuple":[0,1,2,3],"col":4,"ok":true}"#);
        assert_eq!(align(&[vec!["a".into(), "1".into()], vec!["bbb".into(), "22".into()]]), "a     1\nbbb  22\n");
    }
}
