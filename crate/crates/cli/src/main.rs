use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use maxsum_zeta::Kernel;
use maxsum_zeta_cli::args::{CliMethod, NList};
use maxsum_zeta_cli::compute::{self, ComputeRequest};
use maxsum_zeta_cli::records::{render_csv, render_json, render_slopes, render_text, Format};
use maxsum_zeta_cli::table::{run_table, TableConfig};
use maxsum_zeta_cli::verify::{run_verify, Regression};
use maxsum_zeta_cli::{exit, CliError, Result};

/// Riemann zeta through max-indexed and sum-indexed double sums.
#[derive(Parser)]
#[command(name = "maxsum-zeta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate ζ(s) with one method.
    Compute(ComputeArgs),
    /// Emit a convergence table over a list of n.
    Table(TableArgs),
    /// Like `table`, timing every cell `--repeat` times and reporting the median.
    Bench(BenchArgs),
    /// Run the cross-module verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Force sequential kernels.
    #[arg(long)]
    seq: bool,
}

impl Common {
    fn kernel(&self) -> Kernel {
        if self.seq {
            Kernel::Sequential
        } else {
            Kernel::Parallel
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    s: f64,
    #[arg(long, alias = "methods", value_enum)]
    method: CliMethod,
    #[arg(long)]
    n: Option<NList>,
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    s: f64,
    #[arg(long, alias = "method", value_enum, value_delimiter = ',', required = true)]
    methods: Vec<CliMethod>,
    /// Integer, comma list, inclusive range a..b, or a,b,...,c (geometric).
    #[arg(long)]
    n: NList,
    /// Report wall_time_ns as 0 so output is byte-deterministic.
    #[arg(long)]
    no_timing: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    table: TableArgs,
    #[arg(long, default_value_t = 5)]
    repeat: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Substitute a published defect to check that the suite catches it.
    #[arg(long, value_enum)]
    regression: Vec<Regression>,
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, body)?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(body.as_bytes())?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn single_n(ns: Option<NList>) -> Result<Option<u64>> {
    match ns {
        None => Ok(None),
        Some(NList(v)) if v.len() == 1 => Ok(Some(v[0])),
        Some(_) => Err(CliError::InvalidArgs("compute takes a single --n".into())),
    }
}

fn table(args: TableArgs, repeat: usize) -> Result<()> {
    let cfg = TableConfig {
        s: args.s,
        methods: args.methods,
        ns: args.n.0,
        kernel: args.common.kernel(),
        timing: !args.no_timing,
        repeat,
    };
    let output = run_table(&cfg)?;
    let body = match args.common.format {
        Format::Text => render_text(&output),
        Format::Json => render_json(&output)?,
        Format::Csv => {
            eprint!("{}", render_slopes(&output));
            render_csv(&output.records)
        }
    };
    emit(&args.common.out, &body)
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute(args) => {
            let req = ComputeRequest {
                s: args.s,
                method: args.method,
                n: single_n(args.n)?,
                tol: args.tol,
                kernel: args.common.kernel(),
            };
            let report = compute::run_compute(&req)?;
            emit(&args.common.out, &compute::render(&report, args.common.format)?)?;
        }
        Command::Table(args) => table(args, 1)?,
        Command::Bench(args) => table(args.table, args.repeat)?,
        Command::Verify(args) => {
            let reports = run_verify(&args.regression);
            let mut body = String::new();
            for r in &reports {
                body.push_str(&r.line());
                body.push('\n');
            }
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
            if failed.is_empty() {
                body.push_str(&format!("verify: all {} groups passed\n", reports.len()));
            } else {
                body.push_str(&format!("verify: failed groups: {}\n", failed.join(", ")));
            }
            emit(&None, &body)?;
            if !failed.is_empty() {
                return Ok(exit::VERIFY_FAILED);
            }
        }
    }
    Ok(exit::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
