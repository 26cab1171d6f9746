//! Result tables and their CSV / JSON renderings.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::CliError;

/// Significant digits used when rendering numbers.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// Free-form lines written as `#` comments ahead of the CSV header.
    pub metadata: Vec<String>,
}

impl ResultTable {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>, metadata: Vec<String>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            metadata,
        }
    }

    /// Appends a row. Panics if its width differs from the header.
    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match column count");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn values(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.column(name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }
}

/// Renders `x` like C's `%.12g`; non-finite values become `NaN`, `inf`, `-inf`.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let p = SIGNIFICANT_DIGITS;
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_owned()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn render_csv(table: &ResultTable) -> Result<Vec<u8>, CliError> {
    let mut out = Vec::new();
    for line in &table.metadata {
        for part in line.lines() {
            writeln!(out, "# {part}").expect("writing to memory");
        }
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let csv_err = |e: csv::Error| CliError::Schema {
        kind: "csv",
        reason: e.to_string(),
    };
    w.write_record(&table.columns).map_err(csv_err)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|&x| format_number(x))).map_err(csv_err)?;
    }
    w.into_inner().map_err(|e| CliError::Schema {
        kind: "csv",
        reason: e.to_string(),
    })
}

pub fn emit_csv(table: &ResultTable, path: &Path) -> Result<(), CliError> {
    write_file(path, &render_csv(table)?)
}

/// Parses CSV produced by [`emit_csv`], skipping metadata lines.
pub fn parse_csv(bytes: &[u8]) -> Result<(Vec<String>, Vec<Vec<f64>>), CliError> {
    let bad = |reason: String| CliError::Schema { kind: "csv", reason };
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(bytes);
    let columns = r
        .headers()
        .map_err(|e| bad(e.to_string()))?
        .iter()
        .map(str::to_owned)
        .collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        let row = rec
            .iter()
            .map(|f| f.parse::<f64>().map_err(|e| bad(format!("`{f}`: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok((columns, rows))
}

/// JSON summary: the table's columns and rows plus model-specific details.
pub fn render_json(table: &ResultTable, config: &impl Serialize, details: serde_json::Value) -> Vec<u8> {
    let doc = serde_json::json!({
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "columns": table.columns,
        "rows": table.rows,
        "details": details,
    });
    let mut out = serde_json::to_vec_pretty(&doc).expect("json values serialize");
    out.push(b'\n');
    out
}

pub(crate) fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}
