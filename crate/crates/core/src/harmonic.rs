//! Generalized harmonic numbers `H_n^(s) = Σ_{k=1..n} k^-s`.
//!
//! Every sum runs in ascending `k` through [`CompensatedSum`], so results are
//! deterministic and carry a relative error of a few ulps rather than `O(n)`.

use crate::sum::{inv_pow, CompensatedSum};
use crate::{Result, ZetaError};

fn check_exponent(s: f64) -> Result<()> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(ZetaError::domain(format!(
            "harmonic exponent must be finite and > 0, got {s}"
        )));
    }
    Ok(())
}

/// `H_n^(s)` for `n ≥ 1`, `s > 0`.
pub fn harmonic_number(n: u64, s: f64) -> Result<f64> {
    if n < 1 {
        return Err(ZetaError::domain("harmonic index n must be >= 1"));
    }
    check_exponent(s)?;
    Ok(sum_range(1, n, s))
}

/// `Σ_{k=m+1..n} k^-s`, summed directly over the range.
///
/// This never subtracts two prefix values, so short ranges far from the
/// origin keep full relative accuracy. `m = n` gives 0.
pub fn harmonic_range(m: u64, n: u64, s: f64) -> Result<f64> {
    if m > n {
        return Err(ZetaError::domain(format!(
            "harmonic range needs m <= n, got m={m}, n={n}"
        )));
    }
    check_exponent(s)?;
    Ok(sum_range(m + 1, n, s))
}

#[inline]
pub(crate) fn sum_range(first: u64, last: u64, s: f64) -> f64 {
    let mut acc = CompensatedSum::new();
    for k in first..=last {
        acc.add(inv_pow(k, s));
    }
    acc.total()
}

/// Cached prefix sums `H_1^(s) .. H_{n_max}^(s)` for one exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicPrefix {
    s: f64,
    prefix: Vec<f64>,
}

impl HarmonicPrefix {
    pub fn new(n_max: u64, s: f64) -> Result<Self> {
        if n_max < 1 {
            return Err(ZetaError::domain("prefix length n_max must be >= 1"));
        }
        check_exponent(s)?;
        let mut acc = CompensatedSum::new();
        let prefix = (1..=n_max)
            .map(|k| {
                acc.add(inv_pow(k, s));
                acc.total()
            })
            .collect();
        Ok(Self { s, prefix })
    }

    pub fn exponent(&self) -> f64 {
        self.s
    }

    pub fn n_max(&self) -> u64 {
        self.prefix.len() as u64
    }

    /// `H_n^(s)` with 1-based `n`; `None` outside `1..=n_max`.
    pub fn get(&self, n: u64) -> Option<f64> {
        if n == 0 {
            return None;
        }
        self.prefix.get((n - 1) as usize).copied()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.prefix
    }
}

/// Builds a [`HarmonicPrefix`].
pub fn harmonic_prefix(n_max: u64, s: f64) -> Result<HarmonicPrefix> {
    HarmonicPrefix::new(n_max, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{ToPrimitive, Zero};
    use proptest::prelude::*;

    fn exact_harmonic(n: u64, s: u32) -> BigRational {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            acc += BigRational::new(BigInt::from(1), BigInt::from(k).pow(s));
        }
        acc
    }

    #[test]
    fn small_values() {
        assert_eq!(harmonic_number(1, 2.7).unwrap(), 1.0);
        assert_eq!(harmonic_number(3, 2.0).unwrap(), 49.0 / 36.0);
        assert!((harmonic_number(4, 1.0).unwrap() - 25.0 / 12.0).abs() <= f64::EPSILON * 2.0);
    }

    #[test]
    fn relative_error_against_exact_rationals() {
        for s in [1u32, 2, 3, 5] {
            for n in [1u64, 2, 7, 50, 200] {
                let exact = exact_harmonic(n, s).to_f64().unwrap();
                let got = harmonic_number(n, s as f64).unwrap();
                let bound = 4.0 * f64::EPSILON * n as f64 * exact;
                assert!((got - exact).abs() <= bound, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(harmonic_number(0, 2.0), Err(ZetaError::Domain(_))));
        assert!(matches!(harmonic_number(3, 0.0), Err(ZetaError::Domain(_))));
        assert!(matches!(harmonic_number(3, -1.0), Err(ZetaError::Domain(_))));
        assert!(matches!(harmonic_number(3, f64::NAN), Err(ZetaError::Domain(_))));
        assert!(matches!(harmonic_range(5, 4, 2.0), Err(ZetaError::Domain(_))));
        assert!(matches!(harmonic_prefix(0, 2.0), Err(ZetaError::Domain(_))));
    }

    #[test]
    fn range_examples() {
        assert_eq!(harmonic_range(5, 5, 2.0).unwrap(), 0.0);
        assert!((harmonic_range(2, 4, 2.0).unwrap() - 25.0 / 144.0).abs() <= 1e-16);
        assert_eq!(harmonic_range(1, 2, 3.0).unwrap(), 0.125);
        assert_eq!(harmonic_range(0, 3, 2.0).unwrap(), harmonic_number(3, 2.0).unwrap());
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(harmonic_prefix(1, 3.0).unwrap().as_slice(), &[1.0]);
        let p = harmonic_prefix(3, 2.0).unwrap();
        assert_eq!(p.as_slice()[..2], [1.0, 1.25]);
        assert!((p.get(3).unwrap() - 49.0 / 36.0).abs() <= 1e-16);
        let p = harmonic_prefix(4, 3.0).unwrap();
        let exact = 1.0 + 1.0 / 8.0 + 1.0 / 27.0 + 1.0 / 64.0;
        assert!((p.get(4).unwrap() - exact).abs() <= 2.0 * f64::EPSILON);
        assert_eq!(p.get(0), None);
        assert_eq!(p.get(5), None);
        assert_eq!(p.n_max(), 4);
    }

    #[test]
    fn prefix_invariants() {
        for s in [0.5, 1.0, 1.5, 2.0, 3.0] {
            let p = harmonic_prefix(2000, s).unwrap();
            assert_eq!(p.get(1), Some(1.0));
            for n in 2..=2000u64 {
                let hi = p.get(n).unwrap();
                let lo = p.get(n - 1).unwrap();
                assert!(hi > lo, "s={s} n={n}");
                let step = hi - lo;
                let ulp = f64::EPSILON * hi;
                assert!((step - inv_pow(n, s)).abs() <= ulp, "s={s} n={n}");
                assert_eq!(hi, harmonic_number(n, s).unwrap());
            }
        }
    }

    #[test]
    fn range_matches_prefix_difference_on_grid() {
        for s in [1.5, 2.0, 3.0] {
            let p = harmonic_prefix(10_000, s).unwrap();
            for &(m, n) in &[(1u64, 1u64), (1, 10_000), (17, 9_999), (5_000, 5_001), (9_000, 10_000)] {
                let direct = harmonic_range(m, n, s).unwrap();
                let diff = p.get(n).unwrap() - p.get(m).unwrap();
                assert!((direct - diff).abs() <= 1e-12 * p.get(n).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn range_is_prefix_difference(m in 1u64..10_000, len in 0u64..2_000, s_idx in 0usize..3) {
            let s = [1.5, 2.0, 3.0][s_idx];
            let n = (m + len).min(10_000);
            let direct = harmonic_range(m, n, s).unwrap();
            let hn = harmonic_number(n, s).unwrap();
            let hm = harmonic_number(m, s).unwrap();
            prop_assert!((direct - (hn - hm)).abs() <= 1e-12 * hn);
        }

        #[test]
        fn strictly_increasing(n in 1u64..5_000, s in 0.3f64..3.0) {
            prop_assert!(harmonic_number(n + 1, s).unwrap() > harmonic_number(n, s).unwrap());
        }
    }
}
