use std::io::Write;

use serde_json::{json, Map, Value};

use crate::args::Format;

/// One table entry.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// Rounds to `digits` significant digits.
pub fn round_sig(v: f64, digits: u32) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{:.*e}", digits.saturating_sub(1) as usize, v)
        .parse()
        .unwrap_or(v)
}

/// Decimal text of `v` rounded to `digits` significant digits.
pub fn format_number(v: f64, digits: u32) -> String {
    let r = round_sig(v, digits);
    if r == 0.0 {
        "0".to_string()
    } else if !r.is_finite() {
        if r.is_nan() {
            "NaN".to_string()
        } else if r > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        }
    } else if (1e-5..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn json_number(v: f64, digits: u32) -> Value {
    serde_json::Number::from_f64(round_sig(v, digits))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

impl Cell {
    fn csv(&self, digits: u32) -> String {
        match self {
            Cell::Num(v) => format_number(*v, digits),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
        }
    }

    fn json(&self, digits: u32) -> Value {
        match self {
            Cell::Num(v) => json_number(*v, digits),
            Cell::Int(v) => json!(v),
            Cell::Bool(v) => json!(v),
            Cell::Text(v) => json!(v),
        }
    }
}

/// A pass/fail line with its measured value and bound.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckLine {
    pub name: String,
    pub measured: f64,
    pub bound: f64,
    pub passed: bool,
}

/// Everything a subcommand emits.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub config: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub checks: Vec<CheckLine>,
}

impl Report {
    pub fn new(columns: &[&str]) -> Self {
        Report {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn config(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.config.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, out: &mut impl Write, format: Format, digits: u32) -> std::io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out, digits),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json(digits))?;
                writeln!(out)
            }
        }
    }

    fn write_csv(&self, out: &mut impl Write, digits: u32) -> std::io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.csv(digits)))?;
        }
        w.flush()
    }

    pub fn to_json(&self, digits: u32) -> Value {
        let config: Map<String, Value> = self
            .config
            .iter()
            .map(|(k, v)| (k.clone(), v.json(digits)))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| (k.clone(), v.json(digits)))
                        .collect(),
                )
            })
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "measured": json_number(c.measured, digits),
                    "bound": json_number(c.bound, digits),
                    "passed": c.passed,
                })
            })
            .collect();
        json!({ "config": config, "rows": rows, "checks": checks })
    }
}
