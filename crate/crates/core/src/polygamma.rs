//! Bernoulli numbers, polygamma functions of integer order and the zeta
//! tails they encode.
//!
//! `ψ^(m)(x)` is evaluated in the sign-normalised form
//! `g_m(x) = (-1)^(m+1) ψ^(m)(x) > 0`: the argument is first raised with
//! `g_m(x) = g_m(x+1) + m!/x^(m+1)` until it reaches `max(10, 2m)`, then the
//! asymptotic series `Σ_k (k+m-1)!/k! · B_k / X^(k+m)` (with `B_1 = +1/2`)
//! is summed up to, but excluding, its smallest term.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::sum::CompensatedSum;
use crate::{Result, ZetaError};

/// Highest Bernoulli index served by [`bernoulli`].
pub const BERNOULLI_MAX: usize = 64;
/// Supported polygamma orders.
pub const ORDER_MIN: u32 = 1;
pub const ORDER_MAX: u32 = 16;
/// Default cap on the Bernoulli index of summed asymptotic terms. The first
/// omitted term may use index `kmax + 2`, which must stay in the table.
pub const DEFAULT_KMAX: usize = BERNOULLI_MAX - 2;

/// Allowance for floating-point rounding in a polygamma value, in units of
/// `ε·|value|`.
const ROUNDING_ULPS: f64 = 8.0;

/// Bernoulli numbers `B_0..=B_kmax` with `B_1 = +1/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    values: Vec<f64>,
}

impl BernoulliTable {
    /// Exact rational recurrence `Σ_{j=0..k} C(k+1, j) B_j = 0` (k ≥ 1),
    /// rounded to `f64` at the end, then `B_1` flipped to `+1/2`.
    pub fn new(kmax: usize) -> Self {
        let kmax = kmax.max(2);
        let mut exact: Vec<BigRational> = Vec::with_capacity(kmax + 1);
        exact.push(BigRational::one());
        for k in 1..=kmax {
            // binom walks C(k+1, j) for j = 0..k
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (j, b) in exact.iter().enumerate() {
                acc += b * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
            }
            exact.push(-acc / BigRational::from_integer(BigInt::from(k + 1)));
        }
        exact[1] = -exact[1].clone();
        let values = exact
            .iter()
            .map(|b| b.to_f64().expect("Bernoulli numbers up to index 64 fit in f64"))
            .collect();
        Self { values }
    }

    pub fn kmax(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        self.values.get(k).copied()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Process-wide table up to [`BERNOULLI_MAX`], built on first use.
pub fn bernoulli_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::new(BERNOULLI_MAX))
}

/// `B_k` with `B_1 = +1/2`, for `k ≤ 64`.
pub fn bernoulli(k: usize) -> Result<f64> {
    bernoulli_table()
        .get(k)
        .ok_or(ZetaError::UnsupportedOrder { order: k as u64, min: 0, max: BERNOULLI_MAX as u64 })
}

pub(crate) fn factorial(m: u32) -> f64 {
    (2..=m).map(f64::from).product()
}

/// `ψ^(m)(x)` together with a bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygammaValue {
    pub m: u32,
    pub x: f64,
    pub value: f64,
    pub error_bound: f64,
}

impl PolygammaValue {
    /// `(-1)^(m+1) ψ^(m)(x)`, which is positive for `x > 0`.
    pub fn magnitude(&self) -> f64 {
        sign(self.m) * self.value
    }
}

/// `(-1)^(m+1)`.
#[inline]
fn sign(m: u32) -> f64 {
    if m % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

fn check_order(m: u32) -> Result<()> {
    if !(ORDER_MIN..=ORDER_MAX).contains(&m) {
        return Err(ZetaError::UnsupportedOrder {
            order: m as u64,
            min: ORDER_MIN as u64,
            max: ORDER_MAX as u64,
        });
    }
    Ok(())
}

fn check_argument(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(ZetaError::domain(format!("polygamma argument must be finite and > 0, got {x}")));
    }
    Ok(())
}

/// Argument at which the asymptotic series takes over.
pub fn raising_threshold(m: u32) -> f64 {
    f64::max(10.0, 2.0 * m as f64)
}

/// `ψ^(m)(x)` for `1 ≤ m ≤ 16`, `x > 0`.
pub fn polygamma(m: u32, x: f64) -> Result<PolygammaValue> {
    polygamma_with_kmax(m, x, DEFAULT_KMAX)
}

/// As [`polygamma`], summing asymptotic terms only up to Bernoulli index
/// `kmax` (clamped to [`DEFAULT_KMAX`]).
pub fn polygamma_with_kmax(m: u32, x: f64, kmax: usize) -> Result<PolygammaValue> {
    check_order(m)?;
    check_argument(x)?;
    let kmax = kmax.min(DEFAULT_KMAX);
    let mfact = factorial(m);

    let mut acc = CompensatedSum::new();
    let threshold = raising_threshold(m);
    let mut shift = 0u64;
    let mut z = x;
    while z < threshold {
        acc.add(mfact * z.recip().powi(m as i32 + 1));
        shift += 1;
        z = x + shift as f64;
    }

    let (asymptotic, truncation) = asymptotic_magnitude(m, z, kmax);
    acc.add(asymptotic);
    let magnitude = acc.total();
    let error_bound = truncation + ROUNDING_ULPS * f64::EPSILON * magnitude;
    Ok(PolygammaValue { m, x, value: sign(m) * magnitude, error_bound })
}

/// Sum of the asymptotic series for `g_m(z)` and the magnitude of the first
/// omitted term.
fn asymptotic_magnitude(m: u32, z: f64, kmax: usize) -> (f64, f64) {
    let table = bernoulli_table();
    let inv_z = z.recip();
    let m_i = m as i32;

    // coeff = (k+m-1)!/k!, advanced for every k including the vanishing odd ones
    let mut coeff = factorial(m - 1);
    let term_at = |k: usize, coeff: f64| -> f64 {
        let b = table.get(k).unwrap_or(0.0);
        coeff * b * inv_z.powi(k as i32 + m_i)
    };

    let mut acc = CompensatedSum::new();
    let mut pending = term_at(0, coeff);
    let mut k = 0usize;
    loop {
        // next non-vanishing index: 1, 2, 4, 6, ...
        let next = if k == 0 { 1 } else { k + if k == 1 { 1 } else { 2 } };
        if next > kmax {
            return (acc.total(), pending.abs());
        }
        for i in (k + 1)..=next {
            coeff *= (i + m as usize - 1) as f64 / i as f64;
        }
        let term = term_at(next, coeff);
        if term.abs() >= pending.abs() {
            return (acc.total(), pending.abs());
        }
        acc.add(pending);
        pending = term;
        k = next;
        if pending.abs() <= 1e-3 * f64::EPSILON * acc.total().abs() {
            return (acc.total(), pending.abs());
        }
    }
}

/// Bounds `(lo, hi)` on `(-1)^(m+1) ψ^(m)(x)`:
/// `(m-1)!/x^m + m!/(2x^(m+1)) ≤ · ≤ (m-1)!/x^m + m!/x^(m+1)`.
pub fn polygamma_bounds(m: u32, x: f64) -> Result<(f64, f64)> {
    check_order(m)?;
    check_argument(x)?;
    let lead = factorial(m - 1) * x.recip().powi(m as i32);
    let next = factorial(m) * x.recip().powi(m as i32 + 1);
    Ok((lead + 0.5 * next, lead + next))
}

/// A zeta tail `Σ_{k ≥ n} k^-s` with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailSum {
    pub value: f64,
    pub error_bound: f64,
}

fn check_tail_exponent(s: u32) -> Result<()> {
    if !(ORDER_MIN + 1..=ORDER_MAX + 1).contains(&s) {
        return Err(ZetaError::UnsupportedOrder {
            order: s as u64,
            min: (ORDER_MIN + 1) as u64,
            max: (ORDER_MAX + 1) as u64,
        });
    }
    Ok(())
}

/// `Σ_{k ≥ n} k^-s = (-1)^s ψ^(s-1)(n) / (s-1)!` for integer `2 ≤ s ≤ 17`.
pub fn zeta_tail_bounded(s: u32, n: u64) -> Result<TailSum> {
    check_tail_exponent(s)?;
    if n < 1 {
        return Err(ZetaError::domain("zeta tail start n must be >= 1"));
    }
    let psi = polygamma(s - 1, n as f64)?;
    let scale = factorial(s - 1);
    let value = psi.magnitude() / scale;
    if !(value > 0.0) {
        return Err(ZetaError::Internal(format!("zeta tail ({s}, {n}) is not positive: {value}")));
    }
    Ok(TailSum { value, error_bound: psi.error_bound / scale })
}

/// Value-only form of [`zeta_tail_bounded`].
pub fn zeta_tail(s: u32, n: u64) -> Result<f64> {
    zeta_tail_bounded(s, n).map(|t| t.value)
}
