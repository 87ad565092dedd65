//! Independent zeta oracle and the plain Dirichlet baseline.
//!
//! The oracle is the Euler–Maclaurin form of the partial-sum-plus-remainder
//! representation: `H_N^(s) + N^(1-s)/(s-1) - N^-s/2` plus `K` Bernoulli
//! correction terms. It shares only the harmonic sum and the Bernoulli table
//! with the rest of the crate and never touches the polygamma code.

use crate::harmonic::harmonic_number;
use crate::identity::{Method, ZetaEstimate};
use crate::polygamma::bernoulli_table;
use crate::sum::CompensatedSum;
use crate::{Result, ZetaError};

pub const REFERENCE_CUTOFF: u64 = 64;
pub const REFERENCE_TERMS: usize = 8;
pub const REFERENCE_S_MAX: f64 = 32.0;

/// `ζ(s)` for `1 < s ≤ 32`, absolute accuracy about `1e-15`.
pub fn zeta_reference(s: f64) -> Result<f64> {
    zeta_reference_with(s, REFERENCE_CUTOFF, REFERENCE_TERMS)
}

/// Euler–Maclaurin evaluation with explicit cutoff `N` and `K` correction
/// terms (`K ≤ 32`).
pub fn zeta_reference_with(s: f64, cutoff: u64, terms: usize) -> Result<f64> {
    if !(s > 1.0 && s <= REFERENCE_S_MAX) {
        return Err(ZetaError::domain(format!(
            "reference zeta needs 1 < s <= {REFERENCE_S_MAX}, got {s}"
        )));
    }
    if cutoff < 1 || terms > 32 {
        return Err(ZetaError::domain("reference needs cutoff >= 1 and at most 32 terms"));
    }
    let bern = bernoulli_table();
    let n = cutoff as f64;
    let n_pow = n.powf(-s);

    let mut acc = CompensatedSum::new();
    acc.add(harmonic_number(cutoff, s)?);
    acc.add(n * n_pow / (s - 1.0));
    acc.add(-0.5 * n_pow);

    // rising = s (s+1) ... (s+2k-2), fact = (2k)!, power = N^(-s-2k+1)
    let mut rising = s;
    let mut fact = 2.0;
    let mut power = n_pow / n;
    for k in 1..=terms {
        let b = bern.get(2 * k).expect("index within table");
        acc.add(b / fact * rising * power);
        let j = 2.0 * k as f64;
        rising *= (s + j - 1.0) * (s + j);
        fact *= (j + 1.0) * (j + 2.0);
        power /= n * n;
    }
    Ok(acc.total())
}

/// Dirichlet partial sum `H_n^(s)` with the integral-test tail bound
/// `n^(1-s)/(s-1)`.
pub fn zeta_dirichlet_partial(s: f64, n: u64) -> Result<ZetaEstimate> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(ZetaError::domain(format!("Dirichlet series needs s > 1, got {s}")));
    }
    let value = harmonic_number(n, s)?;
    let nf = n as f64;
    Ok(ZetaEstimate {
        s,
        n,
        method: Method::Dirichlet,
        value,
        error_bound: Some(nf.powf(1.0 - s) / (s - 1.0)),
    })
}
