//! Convergence tables and benchmarks.

use std::time::Instant;

use rayon::prelude::*;

use maxsum_zeta::reference::zeta_reference;
use maxsum_zeta::Kernel;

use crate::args::{check_ascending, CliMethod};
use crate::records::{ConvergenceRecord, TableOutput};
use crate::{CliError, Result};

#[derive(Debug, Clone)]
pub struct TableConfig {
    pub s: f64,
    pub methods: Vec<CliMethod>,
    pub ns: Vec<u64>,
    pub kernel: Kernel,
    /// Record wall time; when false every `wall_time_ns` is 0.
    pub timing: bool,
    /// Evaluations per cell; the median wall time is reported.
    pub repeat: usize,
}

impl TableConfig {
    pub fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            return Err(CliError::InvalidArgs("at least one method is required".into()));
        }
        check_ascending(&self.ns)?;
        if self.repeat == 0 {
            return Err(CliError::InvalidArgs("--repeat must be >= 1".into()));
        }
        for m in &self.methods {
            m.validate(self.s)?;
        }
        Ok(())
    }

    fn cells(&self) -> Vec<(CliMethod, u64)> {
        let mut methods = self.methods.clone();
        let mut seen = std::collections::HashSet::new();
        methods.retain(|m| seen.insert(*m));
        methods
            .into_iter()
            .flat_map(|m| self.ns.iter().map(move |&n| (m, n)))
            .collect()
    }
}

fn run_cell(cfg: &TableConfig, method: CliMethod, n: u64, reference: f64) -> Result<ConvergenceRecord> {
    let mut times = Vec::with_capacity(cfg.repeat);
    let mut value = f64::NAN;
    for _ in 0..cfg.repeat {
        let start = Instant::now();
        value = method.evaluate(cfg.s, n, cfg.kernel)?.value;
        times.push(start.elapsed().as_nanos() as u64);
    }
    times.sort_unstable();
    let wall_time_ns = if cfg.timing { times[times.len() / 2] } else { 0 };
    Ok(ConvergenceRecord {
        method,
        s: cfg.s,
        n,
        value,
        abs_error: (value - reference).abs(),
        wall_time_ns,
    })
}

/// Evaluates every `(method, n)` cell, ordered by method (first appearance)
/// and then by `n`.
///
/// Cells run concurrently for a parallel kernel with a single repetition;
/// benchmarks (`repeat > 1`) always run cells one at a time.
pub fn run_table(cfg: &TableConfig) -> Result<TableOutput> {
    cfg.validate()?;
    let reference = zeta_reference(cfg.s)
        .map_err(|e| CliError::InvalidArgs(format!("no reference value for s={}: {e}", cfg.s)))?;
    let cells = cfg.cells();
    let records: Result<Vec<_>> = if cfg.kernel == Kernel::Parallel && cfg.repeat == 1 {
        cells.par_iter().map(|&(m, n)| run_cell(cfg, m, n, reference)).collect()
    } else {
        cells.iter().map(|&(m, n)| run_cell(cfg, m, n, reference)).collect()
    };
    Ok(TableOutput::new(records?))
}
