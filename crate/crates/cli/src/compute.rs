//! The `compute` subcommand.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use maxsum_zeta::bounds::{select_n, zeta_bracket};
use maxsum_zeta::identity::integer_order;
use maxsum_zeta::reference::zeta_reference;
use maxsum_zeta::Kernel;

use crate::args::CliMethod;
use crate::records::{fmt_value, render_csv, ConvergenceRecord, Format};
use crate::{CliError, Result};

#[derive(Debug, Clone)]
pub struct ComputeRequest {
    pub s: f64,
    pub method: CliMethod,
    pub n: Option<u64>,
    pub tol: Option<f64>,
    pub kernel: Kernel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub method: CliMethod,
    pub s: f64,
    pub n: u64,
    pub value: f64,
    pub error_bound: Option<f64>,
    pub lo: Option<f64>,
    pub hi: Option<f64>,
}

pub fn run_compute(req: &ComputeRequest) -> Result<ComputeReport> {
    req.method.validate(req.s)?;
    let n = match (req.n, req.tol) {
        (Some(_), Some(_)) => {
            return Err(CliError::InvalidArgs("give either --n or --tol, not both".into()))
        }
        (None, None) => return Err(CliError::InvalidArgs("one of --n or --tol is required".into())),
        (Some(n), None) => n,
        (None, Some(tol)) => {
            if req.method != CliMethod::Bracket {
                return Err(CliError::InvalidArgs("--tol is only supported with --method bracket".into()));
            }
            select_n(integer_order(req.s)?, tol)?
        }
    };
    let estimate = req.method.evaluate(req.s, n, req.kernel)?;
    let (lo, hi) = if req.method == CliMethod::Bracket {
        let b = zeta_bracket(integer_order(req.s)?, n)?;
        (Some(b.lo), Some(b.hi))
    } else {
        (None, None)
    };
    Ok(ComputeReport {
        method: req.method,
        s: req.s,
        n,
        value: estimate.value,
        error_bound: estimate.error_bound,
        lo,
        hi,
    })
}

pub fn render(report: &ComputeReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "method: {}", report.method);
            let _ = writeln!(out, "s: {}", report.s);
            let _ = writeln!(out, "n: {}", report.n);
            let _ = writeln!(out, "value: {}", fmt_value(report.value));
            match report.error_bound {
                Some(e) => {
                    let _ = writeln!(out, "error_bound: {}", fmt_value(e));
                }
                None => out.push_str("error_bound: none\n"),
            }
            if let (Some(lo), Some(hi)) = (report.lo, report.hi) {
                let _ = writeln!(out, "bracket: [{}, {}]", fmt_value(lo), fmt_value(hi));
                let _ = writeln!(out, "width: {}", fmt_value(hi - lo));
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let reference = zeta_reference(report.s)?;
            render_csv(&[ConvergenceRecord {
                method: report.method,
                s: report.s,
                n: report.n,
                value: report.value,
                abs_error: (report.value - reference).abs(),
                wall_time_ns: 0,
            }])
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use maxsum_zeta::ZetaError;
    use std::f64::consts::PI;

    fn req(s: f64, method: CliMethod, n: Option<u64>, tol: Option<f64>) -> ComputeRequest {
        ComputeRequest { s, method, n, tol, kernel: Kernel::Sequential }
    }

    #[test]
    fn theorem_at_five() {
        let r = run_compute(&req(2.0, CliMethod::Theorem, Some(5), None)).unwrap();
        assert!((r.value - PI * PI / 6.0).abs() <= 1e-11);
        assert_eq!(r.lo, None);
    }

    #[test]
    fn bracket_by_tolerance() {
        let r = run_compute(&req(2.0, CliMethod::Bracket, None, Some(0.5))).unwrap();
        assert_eq!(r.n, 1);
        let (lo, hi) = (r.lo.unwrap(), r.hi.unwrap());
        assert!(lo <= PI * PI / 6.0 && PI * PI / 6.0 <= hi && hi - lo <= 0.5);
        assert!(render(&r, Format::Text).unwrap().contains("bracket: ["));
    }

    #[test]
    fn odd_zeta_three() {
        let r = run_compute(&req(3.0, CliMethod::OddZeta, Some(10), None)).unwrap();
        assert!((r.value - 1.202_056_903_159_594_3).abs() <= 1e-12);
    }

    #[test]
    fn flag_errors() {
        let e = run_compute(&req(2.0, CliMethod::Theorem, None, Some(0.1))).unwrap_err();
        assert_eq!(e.exit_code(), crate::exit::INVALID_ARGS);
        let e = run_compute(&req(2.0, CliMethod::Theorem, None, None)).unwrap_err();
        assert_eq!(e.exit_code(), crate::exit::INVALID_ARGS);
        let e = run_compute(&req(2.0, CliMethod::Bracket, Some(1), Some(0.1))).unwrap_err();
        assert_eq!(e.exit_code(), crate::exit::INVALID_ARGS);
        let e = run_compute(&req(2.0, CliMethod::Bracket, None, Some(1e-14))).unwrap_err();
        assert!(matches!(e, CliError::Numeric(ZetaError::ToleranceUnreachable { .. })));
        assert_eq!(e.exit_code(), crate::exit::TOLERANCE_UNREACHABLE);
    }
}
