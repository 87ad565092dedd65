//! Empirical convergence order.

/// Ordinary least-squares slope of `ln error` against `ln n`.
///
/// Rows with a zero or non-finite error are skipped. Returns `None` when
/// fewer than two usable rows remain or all usable `n` coincide.
pub fn loglog_slope(ns: &[u64], errors: &[f64]) -> Option<f64> {
    let points: Vec<(f64, f64)> = ns
        .iter()
        .zip(errors)
        .filter(|(&n, &e)| n > 0 && e > 0.0 && e.is_finite())
        .map(|(&n, &e)| ((n as f64).ln(), e.ln()))
        .collect();
    if points.len() < 2 {
        return None;
    }
    let len = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    Some(sxy / sxx)
}
