//! Record streams and their CSV / JSON encodings.
//!
//! Floating values are rounded to the configured number of significant
//! digits and then printed in the shortest form that reads back to the
//! rounded value, so the CSV text and the JSON numbers carry identical
//! content.

use std::io::{self, Write};

use harmlike_core::ExactRational;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<f64> for Field {
    fn from(x: f64) -> Self {
        Field::Float(x)
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_owned())
    }
}

impl From<u32> for Field {
    fn from(n: u32) -> Self {
        Field::Int(n.into())
    }
}

impl From<usize> for Field {
    fn from(n: usize) -> Self {
        Field::Int(n as i64)
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

impl<T: Into<Field>> From<Option<T>> for Field {
    fn from(v: Option<T>) -> Self {
        v.map_or(Field::Empty, Into::into)
    }
}

/// One output row: ordered `(column, value)` pairs.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record(Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Record(Vec::new())
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Field>) -> Self {
        self.0.push((key, value.into()));
        self
    }

    pub fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.0.iter().map(|(k, _)| *k)
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

/// Rounds `x` to `precision` significant digits.
pub fn round_significant(x: f64, precision: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let digits = precision.clamp(1, 17);
    format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// Shortest decimal reading back to `x` rounded at `precision` significant digits.
pub fn format_float(x: f64, precision: usize) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let r = round_significant(x, precision);
    if r == 0.0 {
        return "0".into();
    }
    let mag = r.abs();
    if (1e-5..1e16).contains(&mag) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// `numerator/denominator`, denominator always written.
pub fn format_rational(q: &ExactRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn csv_cell(field: &Field, precision: usize) -> String {
    match field {
        Field::Int(n) => n.to_string(),
        Field::Float(x) => format_float(*x, precision),
        Field::Text(s) => s.clone(),
        Field::Bool(b) => b.to_string(),
        Field::Empty => String::new(),
    }
}

fn json_value(field: &Field, precision: usize) -> Value {
    match field {
        Field::Int(n) => Value::from(*n),
        Field::Float(x) => {
            Number::from_f64(round_significant(*x, precision)).map_or(Value::Null, Value::Number)
        }
        Field::Text(s) => Value::String(s.clone()),
        Field::Bool(b) => Value::Bool(*b),
        Field::Empty => Value::Null,
    }
}

/// Writes `records` to `out`. CSV always carries a header row (taken from
/// `header`, so an empty stream still has one) and LF line endings; JSON is
/// an array of objects.
pub fn write_records<W: Write>(
    out: W,
    header: &[&'static str],
    records: &[Record],
    format: Format,
    precision: usize,
) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            writer.write_record(header)?;
            for record in records {
                let row: Vec<String> = header
                    .iter()
                    .map(|k| {
                        record
                            .get(k)
                            .map_or(String::new(), |f| csv_cell(f, precision))
                    })
                    .collect();
                writer.write_record(&row)?;
            }
            writer.flush()
        }
        Format::Json => {
            let rows: Vec<Value> = records
                .iter()
                .map(|record| {
                    let mut obj = Map::new();
                    for k in header {
                        let v = record
                            .get(k)
                            .map_or(Value::Null, |f| json_value(f, precision));
                        obj.insert((*k).to_owned(), v);
                    }
                    Value::Object(obj)
                })
                .collect();
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, &rows)?;
            out.write_all(b"\n")?;
            out.flush()
        }
    }
}
