//! The max-indexed sum `A_n(s)`, the sum-indexed sum `B_n(s)`, their
//! difference, and the exact finite-`n` zeta evaluator.
//!
//! For integer `s ≥ 2` and every `n ≥ 1`:
//!
//! ```text
//! ζ(s) = (A_n - B_n) + Σ_{k ≥ 2n+1} k^-s + (2n+1) Σ_{k=n+1..2n} k^-(s+1)
//! ```
//!
//! with both tails evaluated through polygamma values. The second tail
//! enters with a plus sign; see [`TailSign`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::harmonic::{harmonic_number, harmonic_range};
use crate::polygamma::{zeta_tail_bounded, ORDER_MAX};
use crate::sum::{inv_pow, CompensatedSum};
use crate::{Kernel, Result, ZetaError};

/// Largest `n` accepted by the quadratic brute-force sums.
pub const BRUTE_FORCE_MAX: u64 = 4096;
/// Integer orders accepted by the exact evaluator.
pub const THEOREM_S_MIN: u32 = 2;
pub const THEOREM_S_MAX: u32 = ORDER_MAX;

/// How a [`ZetaEstimate`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Dirichlet,
    Theorem,
    BracketMidpoint,
    DoubleSeries,
    OddZeta,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Dirichlet => "dirichlet",
            Method::Theorem => "theorem",
            Method::BracketMidpoint => "bracket-midpoint",
            Method::DoubleSeries => "double-series",
            Method::OddZeta => "odd-zeta",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value of `ζ(s)` tagged with how it was obtained.
///
/// `n` is 0 when the method has no truncation parameter. `error_bound` is
/// `None` when only a heuristic estimate exists.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaEstimate {
    pub s: f64,
    pub n: u64,
    pub method: Method,
    pub value: f64,
    pub error_bound: Option<f64>,
}

fn check_real_order(s: f64) -> Result<()> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(ZetaError::domain(format!("double sums need real s > 1, got {s}")));
    }
    Ok(())
}

fn check_n(n: u64) -> Result<()> {
    if n < 1 {
        return Err(ZetaError::domain("n must be >= 1"));
    }
    Ok(())
}

fn check_brute(n: u64, s: f64) -> Result<()> {
    check_real_order(s)?;
    if n < 1 || n > BRUTE_FORCE_MAX {
        return Err(ZetaError::Size { n, limit: BRUTE_FORCE_MAX });
    }
    Ok(())
}

/// Converts a real order to an integer in `[2, 16]`.
pub fn integer_order(s: f64) -> Result<u32> {
    if s.fract() != 0.0 || !(THEOREM_S_MIN as f64..=THEOREM_S_MAX as f64).contains(&s) {
        return Err(ZetaError::domain(format!(
            "this method needs an integer s in [{THEOREM_S_MIN}, {THEOREM_S_MAX}], got {s}"
        )));
    }
    Ok(s as u32)
}

/// Sums `term(j, k)` over `[1, n]^2`: one compensated sum per row, row
/// totals folded in ascending `j`.
pub(crate) fn grid_sum<F>(n: u64, kernel: Kernel, term: F) -> f64
where
    F: Fn(u64, u64) -> f64 + Sync,
{
    let row = |j: u64| -> f64 {
        let mut acc = CompensatedSum::new();
        for k in 1..=n {
            acc.add(term(j, k));
        }
        acc.total()
    };
    let rows: Vec<f64> = match kernel {
        Kernel::Sequential => (1..=n).map(row).collect(),
        Kernel::Parallel => (1..=n).into_par_iter().map(row).collect(),
    };
    crate::sum::compensated_sum(rows)
}

/// `k^-p` for `k = 0..=len` (index 0 unused).
pub(crate) fn power_table(len: u64, p: f64) -> Vec<f64> {
    std::iter::once(0.0).chain((1..=len).map(|k| inv_pow(k, p))).collect()
}

/// `A_n(s) = Σ_{j,k=1..n} max(j,k)^-(s+1)` by enumerating all pairs.
pub fn a_brute(n: u64, s: f64) -> Result<f64> {
    a_brute_with(n, s, Kernel::Sequential)
}

pub fn a_brute_with(n: u64, s: f64, kernel: Kernel) -> Result<f64> {
    check_brute(n, s)?;
    let pow = power_table(n, s + 1.0);
    Ok(grid_sum(n, kernel, |j, k| pow[j.max(k) as usize]))
}

/// `B_n(s) = Σ_{j,k=1..n} (j+k)^-(s+1)` by enumerating all pairs.
pub fn b_brute(n: u64, s: f64) -> Result<f64> {
    b_brute_with(n, s, Kernel::Sequential)
}

pub fn b_brute_with(n: u64, s: f64, kernel: Kernel) -> Result<f64> {
    check_brute(n, s)?;
    let pow = power_table(2 * n, s + 1.0);
    Ok(grid_sum(n, kernel, |j, k| pow[(j + k) as usize]))
}

/// Number of pairs in `[1, n]^2` whose maximum is `m`, for any `n ≥ m`.
pub fn pair_count_max(m: u64) -> Result<u64> {
    if m < 1 {
        return Err(ZetaError::domain("pair_count_max needs m >= 1"));
    }
    Ok(2 * m - 1)
}

/// Number of pairs in `[1, n]^2` with `j + k = m`.
pub fn pair_count_sum(m: i64, n: u64) -> u64 {
    let n = n as i64;
    if (2..=n + 1).contains(&m) {
        (m - 1) as u64
    } else if (n + 2..=2 * n).contains(&m) {
        (2 * n - m + 1) as u64
    } else {
        0
    }
}

/// `A_n(s) = 2 H_n^(s) - H_n^(s+1)`.
pub fn a_closed(n: u64, s: f64) -> Result<f64> {
    check_real_order(s)?;
    check_n(n)?;
    Ok(2.0 * harmonic_number(n, s)? - harmonic_number(n, s + 1.0)?)
}

/// `B_n(s) = (2n+1) H_2n^(s+1) - H_2n^(s) - (2n+2) H_{n+1}^(s+1) + 2 H_{n+1}^(s)`.
///
/// Evaluated in the regrouped form
/// `(2n+1) Σ_{k=n+2..2n} k^-(s+1) - Σ_{k=n+2..2n} k^-s + Σ_{k=2..n+1} (k^-s - k^-(s+1))`,
/// which avoids the `O(n)`-fold cancellation between the `(2n+1)` and
/// `(2n+2)` weighted harmonic numbers.
pub fn b_closed(n: u64, s: f64) -> Result<f64> {
    check_real_order(s)?;
    check_n(n)?;
    let weight = 2.0 * n as f64 + 1.0;
    let terms = [
        weight * harmonic_range(n + 1, 2 * n, s + 1.0)?,
        -harmonic_range(n + 1, 2 * n, s)?,
        harmonic_range(1, n + 1, s)?,
        -harmonic_range(1, n + 1, s + 1.0)?,
    ];
    Ok(crate::sum::compensated_sum(terms))
}

/// Term-by-term transcription of the four-term harmonic combination for
/// `B_n(s)`; loses about `log2(2n)` bits to cancellation.
pub fn b_closed_literal(n: u64, s: f64) -> Result<f64> {
    check_real_order(s)?;
    check_n(n)?;
    let nf = n as f64;
    let terms = [
        (2.0 * nf + 1.0) * harmonic_number(2 * n, s + 1.0)?,
        -harmonic_number(2 * n, s)?,
        -(2.0 * nf + 2.0) * harmonic_number(n + 1, s + 1.0)?,
        2.0 * harmonic_number(n + 1, s)?,
    ];
    Ok(crate::sum::compensated_sum(terms))
}

/// `A_n(s) - B_n(s) = H_2n^(s) - (2n+1) Σ_{k=n+1..2n} k^-(s+1)`.
pub fn residual(n: u64, s: f64) -> Result<f64> {
    check_real_order(s)?;
    check_n(n)?;
    let weight = 2.0 * n as f64 + 1.0;
    Ok(harmonic_number(2 * n, s)? - weight * harmonic_range(n, 2 * n, s + 1.0)?)
}

/// Sign given to the `(2n+1)[ψ^(s)(n+1) - ψ^(s)(2n+1)]` correction.
///
/// `Corrected` makes the identity exact. `Printed` reproduces the
/// `(-1)^s / s!` coefficient of the originally published statement, which
/// is off by exactly `2 (2n+1) Σ_{k=n+1..2n} k^-(s+1)`; it exists so that
/// the verification suite can demonstrate the discrepancy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailSign {
    #[default]
    Corrected,
    Printed,
}

/// The pieces of the exact evaluator at one `(s, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremTerms {
    pub s: u32,
    pub n: u64,
    /// `A_n - B_n`.
    pub residual: f64,
    /// `Σ_{k ≥ 2n+1} k^-s`, from `ψ^(s-1)(2n+1)`.
    pub first_tail: f64,
    /// `Σ_{k=n+1..2n} k^-(s+1)`, from `ψ^(s)(n+1) - ψ^(s)(2n+1)`.
    pub second_tail: f64,
    /// `(2n+1) · second_tail`.
    pub correction: f64,
    pub error_bound: f64,
}

/// Evaluates every term of the exact identity at `(s, n)`.
pub fn theorem_terms(s: u32, n: u64) -> Result<TheoremTerms> {
    if !(THEOREM_S_MIN..=THEOREM_S_MAX).contains(&s) {
        return Err(ZetaError::domain(format!(
            "exact evaluator needs integer s in [{THEOREM_S_MIN}, {THEOREM_S_MAX}], got {s}"
        )));
    }
    check_n(n)?;
    let residual = residual(n, s as f64)?;
    let first = zeta_tail_bounded(s, 2 * n + 1)?;
    let near = zeta_tail_bounded(s + 1, n + 1)?;
    let far = zeta_tail_bounded(s + 1, 2 * n + 1)?;
    let second_tail = near.value - far.value;
    if !(first.value > 0.0) || !(second_tail > 0.0) {
        return Err(ZetaError::Internal(format!(
            "tail sums must be positive at s={s}, n={n}: first={}, second={second_tail}",
            first.value
        )));
    }
    let weight = 2.0 * n as f64 + 1.0;
    let correction = weight * second_tail;
    let rounding = 4.0 * f64::EPSILON * (residual.abs() + first.value + correction);
    let error_bound =
        first.error_bound + weight * (near.error_bound + far.error_bound) + rounding;
    Ok(TheoremTerms { s, n, residual, first_tail: first.value, second_tail, correction, error_bound })
}

/// `ζ(s)` from the exact finite-`n` identity, for integer `2 ≤ s ≤ 16`.
pub fn zeta_via_theorem(s: u32, n: u64) -> Result<ZetaEstimate> {
    zeta_via_theorem_signed(s, n, TailSign::Corrected)
}

pub fn zeta_via_theorem_signed(s: u32, n: u64, sign: TailSign) -> Result<ZetaEstimate> {
    let t = theorem_terms(s, n)?;
    let correction = match sign {
        TailSign::Corrected => t.correction,
        TailSign::Printed => -t.correction,
    };
    let value = crate::sum::compensated_sum([t.residual, t.first_tail, correction]);
    Ok(ZetaEstimate {
        s: s as f64,
        n,
        method: Method::Theorem,
        value,
        error_bound: Some(t.error_bound),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::zeta_reference;

    const ZETA2: f64 = 1.644_934_066_848_226_4;

    #[test]
    fn brute_examples() {
        assert_eq!(a_brute(1, 2.0).unwrap(), 1.0);
        assert_eq!(a_brute(2, 2.0).unwrap(), 1.375);
        assert!((a_brute(3, 2.0).unwrap() - (1.0 + 3.0 / 8.0 + 5.0 / 27.0)).abs() <= 1e-15);
        assert_eq!(b_brute(1, 2.0).unwrap(), 0.125);
        assert!((b_brute(2, 2.0).unwrap() - (0.125 + 2.0 / 27.0 + 1.0 / 64.0)).abs() <= 1e-16);
        assert_eq!(b_brute(1, 3.0).unwrap(), 0.0625);
    }

    #[test]
    fn brute_guards() {
        assert!(matches!(a_brute(0, 2.0), Err(ZetaError::Size { .. })));
        assert!(matches!(a_brute(BRUTE_FORCE_MAX + 1, 2.0), Err(ZetaError::Size { .. })));
        assert!(matches!(b_brute(BRUTE_FORCE_MAX + 1, 2.0), Err(ZetaError::Size { .. })));
        assert!(matches!(b_brute(3, 1.0), Err(ZetaError::Domain(_))));
    }

    #[test]
    fn kernels_agree_bitwise() {
        for n in [1, 7, 300] {
            for s in [1.5, 2.0, 4.0] {
                assert_eq!(
                    a_brute_with(n, s, Kernel::Sequential).unwrap(),
                    a_brute_with(n, s, Kernel::Parallel).unwrap()
                );
                assert_eq!(
                    b_brute_with(n, s, Kernel::Sequential).unwrap(),
                    b_brute_with(n, s, Kernel::Parallel).unwrap()
                );
            }
        }
    }

    #[test]
    fn pair_count_examples() {
        assert_eq!(pair_count_max(1).unwrap(), 1);
        assert_eq!(pair_count_max(3).unwrap(), 5);
        assert_eq!(pair_count_max(10).unwrap(), 19);
        assert!(pair_count_max(0).is_err());
        assert_eq!(pair_count_sum(2, 5), 1);
        assert_eq!(pair_count_sum(9, 5), 2);
        assert_eq!(pair_count_sum(12, 5), 0);
        assert_eq!(pair_count_sum(1, 5), 0);
        assert_eq!(pair_count_sum(-3, 5), 0);
    }

    #[test]
    fn pair_counts_match_enumeration() {
        for n in 1..=12u64 {
            for m in 1..=n {
                let mut max_hits = 0;
                for j in 1..=n {
                    for k in 1..=n {
                        if j.max(k) == m {
                            max_hits += 1;
                        }
                    }
                }
                assert_eq!(pair_count_max(m).unwrap(), max_hits);
            }
            for m in 0..=(2 * n as i64 + 2) {
                let hits = (1..=n as i64)
                    .flat_map(|j| (1..=n as i64).map(move |k| j + k))
                    .filter(|&t| t == m)
                    .count() as u64;
                assert_eq!(pair_count_sum(m, n), hits, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn closed_examples() {
        assert_eq!(a_closed(1, 2.0).unwrap(), 1.0);
        assert_eq!(a_closed(2, 2.0).unwrap(), 1.375);
        // 2(1 + 1/8 + 1/27) - (1 + 1/16 + 1/81)
        assert!((a_closed(3, 3.0).unwrap() - 1.249_228_395_061_728_4).abs() <= 1e-15);
        assert!((b_closed(1, 2.0).unwrap() - 0.125).abs() <= 1e-16);
        assert!((b_closed(2, 2.0).unwrap() - b_brute(2, 2.0).unwrap()).abs() <= 1e-15);
        assert!((b_closed(3, 2.0).unwrap() - b_brute(3, 2.0).unwrap()).abs() <= 1e-14);
        for n in [1, 2, 3, 10, 64] {
            let (a, b) = (b_closed(n, 2.5).unwrap(), b_closed_literal(n, 2.5).unwrap());
            assert!((a - b).abs() <= 1e-12 * a);
        }
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residual(1, 2.0).unwrap(), 0.875);
        assert!((residual(2, 2.0).unwrap() - 1.160_300_925_925_925_8).abs() <= 1e-15);
        assert_eq!(residual(1, 3.0).unwrap(), 0.9375);
    }

    #[test]
    fn theorem_anchor() {
        let t = theorem_terms(2, 1).unwrap();
        assert_eq!(t.residual, 0.875);
        assert!((t.first_tail - (ZETA2 - 1.25)).abs() <= 1e-14);
        assert_eq!(t.second_tail, 0.125);
        assert_eq!(t.correction, 0.375);
        let z = zeta_via_theorem(2, 1).unwrap();
        assert!((z.value - ZETA2).abs() <= 1e-14);
        let t = theorem_terms(2, 2).unwrap();
        assert!((t.first_tail - 0.221_322_955_737_115_3).abs() <= 1e-14);
        assert!((t.second_tail - (1.0 / 27.0 + 1.0 / 64.0)).abs() <= 1e-15);
        let z = zeta_via_theorem(3, 1).unwrap();
        assert!((z.value - 1.202_056_903_159_594_3).abs() <= 1e-14);
    }

    #[test]
    fn printed_sign_is_off_by_twice_the_correction() {
        let good = zeta_via_theorem(2, 1).unwrap().value;
        let bad = zeta_via_theorem_signed(2, 1, TailSign::Printed).unwrap().value;
        assert!((good - bad - 0.75).abs() <= 1e-14);
    }

    #[test]
    fn theorem_domain() {
        assert!(matches!(zeta_via_theorem(1, 3), Err(ZetaError::Domain(_))));
        assert!(matches!(zeta_via_theorem(17, 3), Err(ZetaError::Domain(_))));
        assert!(matches!(zeta_via_theorem(2, 0), Err(ZetaError::Domain(_))));
        assert!(integer_order(2.5).is_err());
        assert!(integer_order(1.0).is_err());
        assert_eq!(integer_order(16.0).unwrap(), 16);
    }

    #[test]
    fn theorem_exact_at_every_n() {
        for s in 2..=6u32 {
            let z = zeta_reference(s as f64).unwrap();
            let values: Vec<f64> =
                (1..=50).map(|n| zeta_via_theorem(s, n).unwrap().value).collect();
            for (i, v) in values.iter().enumerate() {
                let e = zeta_via_theorem(s, i as u64 + 1).unwrap();
                assert!((v - z).abs() <= f64::max(1e-11, e.error_bound.unwrap()), "s={s} n={}", i + 1);
            }
            let spread = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
                - values.iter().cloned().fold(f64::INFINITY, f64::min);
            assert!(spread <= 1e-10, "s={s} spread={spread:e}");
        }
    }

    #[test]
    fn theorem_high_orders() {
        for s in 7..=16u32 {
            let z = zeta_reference(s as f64).unwrap();
            for n in [1, 3, 40, 1000] {
                let e = zeta_via_theorem(s, n).unwrap();
                assert!((e.value - z).abs() <= 1e-13, "s={s} n={n}");
            }
        }
    }
}
