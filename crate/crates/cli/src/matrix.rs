//! `permspec matrix`: the full `n! × n!` operator matrix.

use std::fmt::Write as _;

use permspec_core::{Polynomial, StatisticKind};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Serialize)]
struct JsonMatrix<'a> {
    n: usize,
    kind: &'a str,
    order: &'a str,
    entries: Vec<Vec<String>>,
}

/// Rows and columns in lexicographic order, every cell quoted.
pub fn render_csv(m: &[Vec<Polynomial>]) -> String {
    let mut out = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(|p| format!("\"{p}\"")).collect();
        writeln!(out, "{}", cells.join(",")).expect("string write");
    }
    out
}

pub fn render_json(kind: StatisticKind, n: usize, m: &[Vec<Polynomial>]) -> String {
    let entries = m.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect();
    let doc = JsonMatrix { n, kind: kind.name(), order: "lex", entries };
    serde_json::to_string_pretty(&doc).expect("matrix serializes") + "\n"
}

pub fn render(kind: StatisticKind, n: usize, format: MatrixFormat) -> permspec_core::Result<String> {
    let m = permspec_core::algebra::build_matrix(kind, n)?;
    Ok(match format {
        MatrixFormat::Csv => render_csv(&m),
        MatrixFormat::Json => render_json(kind, n, &m),
    })
}
