//! The positive-term double series for `ζ(s)` and the relation between
//! even and odd zeta values.
//!
//! `Σ_{j,k ≥ 1} [max(j,k)^-(s+1) - (j+k)^-(s+1)] = ζ(s)`, every term being
//! positive because `max(j,k) < j+k`. Summing `max(j,k)^-(2t+1)` alone gives
//! `2ζ(2t) - ζ(2t+1)`, which turns into an evaluator for odd zeta values once
//! the truncation remainder is supplied by polygamma tails.

use std::f64::consts::PI;

use crate::harmonic::harmonic_number;
use crate::identity::{a_closed, grid_sum, power_table, Method, ZetaEstimate};
use crate::polygamma::{zeta_tail_bounded, ORDER_MAX};
use crate::reference::zeta_reference;
use crate::sum::inv_pow;
use crate::{Kernel, Result, ZetaError};

/// Largest `t` for which [`odd_zeta`] can supply its polygamma tails.
pub const ODD_ZETA_T_MAX: u32 = ORDER_MAX / 2;

fn check_real_order(s: f64) -> Result<()> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(ZetaError::domain(format!("series needs real s > 1, got {s}")));
    }
    Ok(())
}

/// One term `max(j,k)^-(s+1) - (j+k)^-(s+1)`.
pub fn double_series_term(j: u64, k: u64, s: f64) -> f64 {
    inv_pow(j.max(k), s + 1.0) - inv_pow(j + k, s + 1.0)
}

/// Partial sum of the double series over the square `[1, n]^2`.
pub fn double_series_partial(s: f64, n: u64) -> Result<f64> {
    double_series_partial_with(s, n, Kernel::Sequential)
}

pub fn double_series_partial_with(s: f64, n: u64, kernel: Kernel) -> Result<f64> {
    check_real_order(s)?;
    if n < 1 {
        return Err(ZetaError::domain("n must be >= 1"));
    }
    let pow = power_table(2 * n, s + 1.0);
    Ok(grid_sum(n, kernel, |j, k| pow[j.max(k) as usize] - pow[(j + k) as usize]))
}

/// The double series as a [`ZetaEstimate`]; the remainder is only known
/// asymptotically, so no error bound is attached.
pub fn double_series_estimate(s: f64, n: u64, kernel: Kernel) -> Result<ZetaEstimate> {
    Ok(ZetaEstimate {
        s,
        n,
        method: Method::DoubleSeries,
        value: double_series_partial_with(s, n, kernel)?,
        error_bound: None,
    })
}

/// `Σ_{j,k ≥ 1} max(j,k)^-(s+1) = 2ζ(s) - ζ(s+1)`.
pub fn max_sum_limit(s: f64) -> Result<f64> {
    check_real_order(s)?;
    Ok(2.0 * zeta_reference(s)? - zeta_reference(s + 1.0)?)
}

/// `Σ_{j,k=1..n} max(j,k)^-p = 2 H_n^(p-1) - H_n^(p)` for any `p > 1`.
///
/// Unlike the `s > 1` closed form this accepts `1 < p ≤ 2`, where the full
/// series diverges; it backs the divergence check on the exponent-2 variant.
pub fn max_sum_partial(n: u64, exponent: f64) -> Result<f64> {
    if !(exponent > 1.0) || !exponent.is_finite() {
        return Err(ZetaError::domain(format!("max-sum exponent must be > 1, got {exponent}")));
    }
    Ok(2.0 * harmonic_number(n, exponent - 1.0)? - harmonic_number(n, exponent)?)
}

fn check_t(t: u32) -> Result<()> {
    if !(1..=ODD_ZETA_T_MAX).contains(&t) {
        return Err(ZetaError::domain(format!("odd-zeta index t must be in [1, {ODD_ZETA_T_MAX}], got {t}")));
    }
    Ok(())
}

/// `Σ_{j,k ≥ 1} max(j,k)^-(2t+1)`: the partial sum over `[1, n]^2` plus the
/// remainder `2 Σ_{k>n} k^-2t - Σ_{k>n} k^-(2t+1)`. Returns value and bound.
fn completed_max_sum(t: u32, n: u64) -> Result<(f64, f64)> {
    check_t(t)?;
    if n < 1 {
        return Err(ZetaError::domain("n must be >= 1"));
    }
    let even = 2 * t;
    let partial = a_closed(n, even as f64)?;
    let tail_even = zeta_tail_bounded(even, n + 1)?;
    let tail_odd = zeta_tail_bounded(even + 1, n + 1)?;
    let value = partial + 2.0 * tail_even.value - tail_odd.value;
    let bound = 2.0 * tail_even.error_bound + tail_odd.error_bound + 4.0 * f64::EPSILON * value.abs();
    Ok((value, bound))
}

/// `ζ(2t+1) = 2ζ(2t) - Σ_{j,k ≥ 1} max(j,k)^-(2t+1)`, exact at every `n`.
pub fn odd_zeta(t: u32, n: u64) -> Result<ZetaEstimate> {
    let (max_sum, bound) = completed_max_sum(t, n)?;
    let even = zeta_reference(2.0 * t as f64)?;
    let value = 2.0 * even - max_sum;
    Ok(ZetaEstimate {
        s: (2 * t + 1) as f64,
        n,
        method: Method::OddZeta,
        value,
        error_bound: Some(bound + 4.0 * f64::EPSILON * even),
    })
}

/// `ζ(3) = π²/3 - Σ_{j,k ≥ 1} max(j,k)^-3`.
pub fn apery_constant(n: u64) -> Result<ZetaEstimate> {
    let (max_sum, bound) = completed_max_sum(1, n)?;
    let value = PI * PI / 3.0 - max_sum;
    Ok(ZetaEstimate {
        s: 3.0,
        n,
        method: Method::OddZeta,
        value,
        error_bound: Some(bound + 4.0 * f64::EPSILON * value),
    })
}
