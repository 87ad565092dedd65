//! Parsing of `--n` lists and method selection.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use maxsum_zeta::bounds::zeta_bracket;
use maxsum_zeta::identity::{integer_order, zeta_via_theorem};
use maxsum_zeta::reference::zeta_dirichlet_partial;
use maxsum_zeta::series::{double_series_estimate, odd_zeta, ODD_ZETA_T_MAX};
use maxsum_zeta::{Kernel, ZetaEstimate};

use crate::{CliError, Result};

/// Evaluation methods selectable from the command line.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum, Serialize, Deserialize,
)]
#[serde(rename_all = "kebab-case")]
pub enum CliMethod {
    Dirichlet,
    Theorem,
    Bracket,
    DoubleSeries,
    OddZeta,
}

impl CliMethod {
    pub fn name(self) -> &'static str {
        match self {
            CliMethod::Dirichlet => "dirichlet",
            CliMethod::Theorem => "theorem",
            CliMethod::Bracket => "bracket",
            CliMethod::DoubleSeries => "double-series",
            CliMethod::OddZeta => "odd-zeta",
        }
    }

    /// Checks that `s` is admissible for this method.
    pub fn validate(self, s: f64) -> Result<()> {
        match self {
            CliMethod::Dirichlet | CliMethod::DoubleSeries => {
                if !(s > 1.0) || !s.is_finite() {
                    return Err(CliError::InvalidArgs(format!("{} needs s > 1, got {s}", self.name())));
                }
            }
            CliMethod::Theorem | CliMethod::Bracket => {
                integer_order(s)?;
            }
            CliMethod::OddZeta => {
                odd_index(s)?;
            }
        }
        Ok(())
    }

    pub fn evaluate(self, s: f64, n: u64, kernel: Kernel) -> Result<ZetaEstimate> {
        let estimate = match self {
            CliMethod::Dirichlet => zeta_dirichlet_partial(s, n)?,
            CliMethod::Theorem => zeta_via_theorem(integer_order(s)?, n)?,
            CliMethod::Bracket => zeta_bracket(integer_order(s)?, n)?.to_estimate(),
            CliMethod::DoubleSeries => double_series_estimate(s, n, kernel)?,
            CliMethod::OddZeta => odd_zeta(odd_index(s)?, n)?,
        };
        Ok(estimate)
    }
}

impl std::fmt::Display for CliMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// `t` with `s = 2t + 1`, for odd integer `s ≥ 3`.
pub fn odd_index(s: f64) -> Result<u32> {
    let s_max = (2 * ODD_ZETA_T_MAX + 1) as f64;
    if s.fract() != 0.0 || s < 3.0 || s % 2.0 != 1.0 || s > s_max {
        return Err(CliError::InvalidArgs(format!(
            "odd-zeta needs an odd integer s in [3, {s_max}], got {s}"
        )));
    }
    Ok(((s - 1.0) / 2.0) as u32)
}

/// A parsed `--n` value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NList(pub Vec<u64>);

impl std::str::FromStr for NList {
    type Err = String;

    fn from_str(raw: &str) -> std::result::Result<Self, String> {
        parse_n_list(raw).map(NList)
    }
}

/// Parses `--n`: a single integer, a comma list, an inclusive range `a..b`,
/// or `a,b,...,c`, which continues the ratio `b/a` geometrically up to `c`.
pub fn parse_n_list(raw: &str) -> std::result::Result<Vec<u64>, String> {
    let raw = raw.trim();
    if let Some((a, b)) = raw.split_once("..").filter(|_| !raw.contains(',')) {
        let (a, b) = (parse_positive(a)?, parse_positive(b)?);
        if a > b {
            return Err(format!("empty range {raw}"));
        }
        return Ok((a..=b).collect());
    }
    let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
    if let Some(pos) = parts.iter().position(|p| *p == "...") {
        if pos != 2 || parts.len() != 4 {
            return Err(format!("ellipsis form must be a,b,...,c, got {raw}"));
        }
        let (a, b, c) = (parse_positive(parts[0])?, parse_positive(parts[1])?, parse_positive(parts[3])?);
        if b <= a || b % a != 0 {
            return Err(format!("ellipsis needs b to be a multiple of a greater than a, got {a},{b}"));
        }
        let ratio = b / a;
        let mut out = vec![a];
        let mut next = b;
        while next <= c {
            out.push(next);
            next = match next.checked_mul(ratio) {
                Some(v) => v,
                None => break,
            };
        }
        if *out.last().unwrap() != c {
            return Err(format!("{c} is not reached by the progression {a},{b},..."));
        }
        return Ok(out);
    }
    parts.into_iter().map(parse_positive).collect()
}

fn parse_positive(raw: &str) -> std::result::Result<u64, String> {
    let v: u64 = raw.trim().parse().map_err(|_| format!("not a positive integer: {raw:?}"))?;
    if v == 0 {
        return Err("n must be >= 1".to_string());
    }
    Ok(v)
}

/// Rejects lists that are not strictly increasing.
pub fn check_ascending(ns: &[u64]) -> Result<()> {
    if ns.is_empty() {
        return Err(CliError::InvalidArgs("--n list is empty".into()));
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::InvalidArgs("--n list must be strictly increasing".into()));
    }
    Ok(())
}
