use anyhow::Result;
use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<I: IntoIterator<Item = S>, S: Into<String>>(header: I) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<I: IntoIterator<Item = S>, S: Into<String>>(&mut self, row: I) {
        self.rows.push(row.into_iter().map(Into::into).collect());
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Rows of exact integers as JSON numbers (never through `f64`), one row per
/// line.
pub fn number_rows(rows: &[Vec<BigInt>]) -> Result<String> {
    let mut lines = Vec::with_capacity(rows.len());
    for row in rows {
        let nums = row
            .iter()
            .map(|v| Ok(Value::Number(v.to_string().parse::<Number>()?)))
            .collect::<Result<Vec<_>>>()?;
        lines.push(format!("  {}", serde_json::to_string(&nums)?));
    }
    Ok(format!("[\n{}\n]\n", lines.join(",\n")))
}
