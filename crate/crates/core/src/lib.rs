//! Riemann zeta numerics built on two structured double sums.
//!
//! For real `s > 1` the max-indexed sum
//! `A_n(s) = Σ_{j,k ≤ n} max(j,k)^-(s+1)` and the sum-indexed sum
//! `B_n(s) = Σ_{j,k ≤ n} (j+k)^-(s+1)` satisfy `A_n(s) - B_n(s) → ζ(s)`.
//! At every finite `n` the gap is closed exactly by two zeta tails, which
//! for integer `s` are polygamma values. This crate provides:
//!
//! * [`harmonic`]: generalized harmonic numbers with compensated summation,
//! * [`polygamma`]: Bernoulli numbers, `ψ^(m)(x)` with a truncation bound,
//!   the two-sided polygamma inequality and zeta tails,
//! * [`identity`]: brute-force and closed forms of `A_n`, `B_n`, and the
//!   exact finite-`n` evaluator,
//! * [`bounds`]: certified brackets of `ζ(s)` and tolerance-driven `n`,
//! * [`series`]: the positive-term double series and the odd-zeta relation,
//! * [`reference`]: an independent Euler–Maclaurin oracle and the plain
//!   Dirichlet partial sum.

pub mod bounds;
pub mod convergence;
mod error;
pub mod harmonic;
pub mod identity;
pub mod polygamma;
pub mod reference;
pub mod series;
pub mod sum;

pub use error::{Result, ZetaError};
pub use identity::{Method, ZetaEstimate};

/// Execution strategy for the quadratic double-sum kernels.
///
/// Both modes accumulate one compensated sum per row and then fold the row
/// sums in ascending row order, so they return bitwise-identical results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Kernel {
    #[default]
    Sequential,
    Parallel,
}
