//! Convergence rows and their text, CSV and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use maxsum_zeta::convergence::loglog_slope;

use crate::args::CliMethod;

pub const CSV_HEADER: &str = "method,s,n,value,abs_error,wall_time_ns";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// One `(method, s, n)` evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub method: CliMethod,
    pub s: f64,
    pub n: u64,
    pub value: f64,
    /// `|value - ζ_ref(s)|`.
    pub abs_error: f64,
    pub wall_time_ns: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableOutput {
    pub records: Vec<ConvergenceRecord>,
    /// Fitted log-log error slope per method; methods with fewer than two
    /// non-zero errors are absent.
    pub slopes: BTreeMap<String, f64>,
}

impl TableOutput {
    pub fn new(records: Vec<ConvergenceRecord>) -> Self {
        let mut by_method: BTreeMap<CliMethod, (Vec<u64>, Vec<f64>)> = BTreeMap::new();
        for r in &records {
            let entry = by_method.entry(r.method).or_default();
            entry.0.push(r.n);
            entry.1.push(r.abs_error);
        }
        let slopes = by_method
            .into_iter()
            .filter_map(|(m, (ns, errs))| loglog_slope(&ns, &errs).map(|k| (m.name().to_string(), k)))
            .collect();
        Self { records, slopes }
    }
}

/// 17 significant digits.
pub fn fmt_value(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render_csv(records: &[ConvergenceRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.method,
            r.s,
            r.n,
            fmt_value(r.value),
            fmt_value(r.abs_error),
            r.wall_time_ns
        );
    }
    out
}

pub fn render_json(table: &TableOutput) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(table)?;
    s.push('\n');
    Ok(s)
}

pub fn render_text(table: &TableOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14} {:>6} {:>10} {:>24} {:>24} {:>14}",
        "method", "s", "n", "value", "abs_error", "wall_time_ns"
    );
    for r in &table.records {
        let _ = writeln!(
            out,
            "{:<14} {:>6} {:>10} {:>24} {:>24} {:>14}",
            r.method.name(),
            r.s,
            r.n,
            fmt_value(r.value),
            fmt_value(r.abs_error),
            r.wall_time_ns
        );
    }
    out.push_str(&render_slopes(table));
    out
}

/// `slope <method> = <k>` lines, one per fitted method.
pub fn render_slopes(table: &TableOutput) -> String {
    let mut out = String::new();
    for (m, k) in &table.slopes {
        let _ = writeln!(out, "slope {m} = {k:.6}");
    }
    out
}
