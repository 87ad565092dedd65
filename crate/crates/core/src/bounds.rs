//! Certified two-sided enclosures of `ζ(s)` for integer `s`.
//!
//! Each of the two zeta tails in the exact identity is replaced by the
//! interval obtained from the polygamma double inequality; the difference
//! tail uses interval subtraction. A few ulps of outward padding absorb
//! rounding in the assembly.

use crate::identity::{residual, Method, ZetaEstimate, THEOREM_S_MAX, THEOREM_S_MIN};
use crate::polygamma::{factorial, polygamma_bounds};
use crate::{Result, ZetaError};

/// Smallest width [`select_n`] will try to reach.
pub const TOLERANCE_FLOOR: f64 = 1e-13;
const MAX_SEARCH_N: u64 = 1 << 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub s: u32,
    pub n: u64,
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Midpoint estimate with half the width as its error bound.
    pub fn to_estimate(&self) -> ZetaEstimate {
        ZetaEstimate {
            s: self.s as f64,
            n: self.n,
            method: Method::BracketMidpoint,
            value: self.midpoint(),
            error_bound: Some(0.5 * self.width()),
        }
    }
}

fn check_order(s: u32) -> Result<()> {
    if !(THEOREM_S_MIN..=THEOREM_S_MAX).contains(&s) {
        return Err(ZetaError::domain(format!(
            "bracket needs integer s in [{THEOREM_S_MIN}, {THEOREM_S_MAX}], got {s}"
        )));
    }
    Ok(())
}

/// Enclosure of `ζ(s)` at truncation `n`.
pub fn zeta_bracket(s: u32, n: u64) -> Result<Bracket> {
    check_order(s)?;
    if n < 1 {
        return Err(ZetaError::domain("n must be >= 1"));
    }
    let r = residual(n, s as f64)?;
    let (near, far) = ((n + 1) as f64, (2 * n + 1) as f64);

    // Σ_{k ≥ 2n+1} k^-s
    let scale = factorial(s - 1);
    let (l, u) = polygamma_bounds(s - 1, far)?;
    let (first_lo, first_hi) = (l / scale, u / scale);

    // Σ_{k=n+1..2n} k^-(s+1) = tail(n+1) - tail(2n+1)
    let scale = factorial(s);
    let (near_lo, near_hi) = polygamma_bounds(s, near)?;
    let (far_lo, far_hi) = polygamma_bounds(s, far)?;
    let second_lo = (near_lo - far_hi) / scale;
    let second_hi = (near_hi - far_lo) / scale;

    let weight = 2.0 * n as f64 + 1.0;
    let lo = r + first_lo + weight * second_lo;
    let hi = r + first_hi + weight * second_hi;
    let pad = 4.0 * f64::EPSILON * (r.abs() + first_hi + weight * second_hi.abs());
    Ok(Bracket { s, n, lo: lo - pad, hi: hi + pad })
}

/// Smallest `n` with `zeta_bracket(s, n).width() ≤ tol`.
///
/// Doubles `n` until the width drops below `tol`, then bisects the last
/// doubling interval. The result always satisfies `width(n) ≤ tol` and, for
/// `n > 1`, `width(n - 1) > tol`.
pub fn select_n(s: u32, tol: f64) -> Result<u64> {
    check_order(s)?;
    if !(tol > 0.0) {
        return Err(ZetaError::domain(format!("tolerance must be > 0, got {tol}")));
    }
    if tol < TOLERANCE_FLOOR {
        return Err(ZetaError::ToleranceUnreachable { tol, floor: TOLERANCE_FLOOR });
    }
    let fits = |n: u64| -> Result<bool> { Ok(zeta_bracket(s, n)?.width() <= tol) };

    if fits(1)? {
        return Ok(1);
    }
    let (mut bad, mut good) = (1u64, 2u64);
    while !fits(good)? {
        bad = good;
        good *= 2;
        if good > MAX_SEARCH_N {
            return Err(ZetaError::ToleranceUnreachable { tol, floor: TOLERANCE_FLOOR });
        }
    }
    while good - bad > 1 {
        let mid = bad + (good - bad) / 2;
        if fits(mid)? {
            good = mid;
        } else {
            bad = mid;
        }
    }
    Ok(good)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convergence::loglog_slope;
    use crate::reference::zeta_reference;
    use std::f64::consts::PI;

    #[test]
    fn hand_substituted_bracket() {
        let b = zeta_bracket(2, 1).unwrap();
        // 0.875 + (1/3 + 1/18) + 3 (0.375 - 5/27) / 2
        let lo = 0.875 + (1.0 / 3.0 + 1.0 / 18.0) + 3.0 * (0.375 - (1.0 / 9.0 + 2.0 / 27.0)) / 2.0;
        let hi = 0.875 + (1.0 / 3.0 + 1.0 / 9.0) + 3.0 * (0.5 - (1.0 / 9.0 + 1.0 / 27.0)) / 2.0;
        assert!((b.lo - lo).abs() <= 1e-14 && (b.hi - hi).abs() <= 1e-14);
        assert!((b.lo - 1.548_610).abs() <= 1e-4);
        assert!((b.hi - 1.847_222).abs() <= 1e-4);
        assert!(b.contains(PI * PI / 6.0));
        assert!((b.width() - 0.2986).abs() <= 1e-4);
    }

    #[test]
    fn examples() {
        let b = zeta_bracket(2, 50).unwrap();
        assert!(b.width() <= 1e-3 && b.contains(PI * PI / 6.0));
        assert!(zeta_bracket(3, 1).unwrap().contains(1.202_056_903_159_594_3));
        assert!(matches!(zeta_bracket(1, 3), Err(ZetaError::Domain(_))));
        assert!(matches!(zeta_bracket(2, 0), Err(ZetaError::Domain(_))));
    }

    #[test]
    fn containment_grid() {
        for s in 2..=6u32 {
            let z = zeta_reference(s as f64).unwrap();
            let mut prev_width = f64::INFINITY;
            for n in 1..=100 {
                let b = zeta_bracket(s, n).unwrap();
                assert!(b.lo <= b.hi);
                assert!(b.contains(z), "s={s} n={n}: [{}, {}] vs {z}", b.lo, b.hi);
                assert!((b.midpoint() - z).abs() <= b.width() / 2.0);
                assert!(b.width() <= prev_width, "s={s} n={n}");
                prev_width = b.width();
            }
        }
    }

    #[test]
    fn width_decays_like_n_to_minus_s() {
        for s in [2u32, 3] {
            let ns: Vec<u64> = (3..=9).map(|p| 1u64 << p).collect();
            let widths: Vec<f64> = ns.iter().map(|&n| zeta_bracket(s, n).unwrap().width()).collect();
            let slope = loglog_slope(&ns, &widths).unwrap();
            assert!(slope <= -(s as f64) + 0.2, "s={s} slope={slope}");
        }
    }

    #[test]
    fn select_n_examples() {
        assert_eq!(select_n(2, 1.0).unwrap(), 1);
        assert_eq!(select_n(4, 1.0).unwrap(), 1);
        assert!(matches!(select_n(2, 1e-14), Err(ZetaError::ToleranceUnreachable { .. })));
        assert!(matches!(select_n(2, 0.0), Err(ZetaError::Domain(_))));
    }

    #[test]
    fn select_n_is_minimal() {
        for s in [2u32, 3, 5] {
            for tol in [0.25, 1e-2, 1e-4, 1e-7, 1e-10] {
                let n = select_n(s, tol).unwrap();
                assert!(zeta_bracket(s, n).unwrap().width() <= tol);
                if n > 1 {
                    assert!(zeta_bracket(s, n - 1).unwrap().width() > tol, "s={s} tol={tol}");
                }
            }
        }
    }

    #[test]
    fn estimate_from_bracket() {
        let b = zeta_bracket(3, 10).unwrap();
        let e = b.to_estimate();
        assert_eq!(e.method, Method::BracketMidpoint);
        assert_eq!(e.n, 10);
        assert_eq!(e.error_bound, Some(b.width() / 2.0));
    }
}
