//! Compensated accumulation and the reciprocal power kernel shared by every
//! summation in the crate.

use std::iter::Sum;
use std::ops::AddAssign;

/// Kahan–Babuška–Neumaier running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl Sum<f64> for CompensatedSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of an iterator of `f64`.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().sum::<CompensatedSum>().total()
}

/// Largest integer exponent served by the `powi` kernel.
pub const INTEGER_POWER_MAX: f64 = 16.0;

/// `k^(-s)` for `k ≥ 1`.
///
/// Integer exponents up to [`INTEGER_POWER_MAX`] go through `powi`;
/// everything else through `powf`.
#[inline]
pub fn inv_pow(k: u64, s: f64) -> f64 {
    let k = k as f64;
    if s.fract() == 0.0 && (1.0..=INTEGER_POWER_MAX).contains(&s) {
        1.0 / k.powi(s as i32)
    } else {
        k.powf(-s)
    }
}
