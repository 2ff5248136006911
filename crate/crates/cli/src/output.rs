//! Rendering of value tables as plain text, CSV and JSON.

use std::fmt::Write as _;

use clap::ValueEnum;
use degbell_core::LambdaPoly;
use serde::Serialize;

use crate::family::{Family, LambdaArg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub k: Option<usize>,
    pub value: LambdaPoly,
}

#[derive(Clone, Debug)]
pub struct Table {
    pub family: Family,
    pub lambda: LambdaArg,
    pub rows: Vec<Row>,
}

#[derive(Serialize)]
struct JsonRow {
    n: usize,
    k: Option<usize>,
    value: Vec<String>,
}

#[derive(Serialize)]
struct JsonTable {
    family: String,
    lambda: String,
    rows: Vec<JsonRow>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain(),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            match row.k {
                Some(k) => writeln!(out, "n={} k={}: {}", row.n, k, row.value),
                None => writeln!(out, "n={}: {}", row.n, row.value),
            }
            .unwrap();
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for row in &self.rows {
            let k = row.k.map(|k| k.to_string()).unwrap_or_default();
            writeln!(out, "{},{},{}", row.n, k, row.value).unwrap();
        }
        out
    }

    fn json(&self) -> String {
        let doc = JsonTable {
            family: self.family.to_string(),
            lambda: self.lambda.label(),
            rows: self
                .rows
                .iter()
                .map(|r| JsonRow {
                    n: r.n,
                    k: r.k,
                    value: r.value.to_pq_strings(),
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("table serializes");
        text.push('\n');
        text
    }
}
