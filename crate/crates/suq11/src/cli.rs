//! Batch command-line interface over the engine.
//!
//! Subcommands: `eval` normalizes an expression, `d`, `D`, `star`, and
//! `hodge` apply one operator each, `laplacian` and `commutator` act on a
//! weight-`n` section value, `tables` prints an eigenvalue table as CSV or
//! JSON rows, and `verify` runs the invariant suites from [`crate::verify`].
//!
//! Exit codes: 0 on success, 1 on a usage, parse, or precondition error, 2
//! when a verification suite fails. The `QH_BOUND` environment variable
//! overrides the default exponent and weight bound of 4 wherever no `--bound`
//! flag is given. All output is deterministic, so table output can be diffed
//! byte for byte across runs.

use crate::bundles::Section;
use crate::coeffs::Rational;
use crate::connection::{covariant_derivative, Qpc};
use crate::forms::{hodge_left, EtaWord, Form};
use crate::laplacians::{gauge_commutator, gauge_laplacian_left, gauge_laplacian_right, spectrum_table, SpectrumRow};
use crate::parse::parse_form;
use crate::verify::{run_suite, Suite};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::fmt::Write as _;

/// Parses the argument list, runs one command, and prints the result;
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            1
        }
        Err(Failure::Verification(output)) => {
            print!("{output}");
            2
        }
    }
}

#[derive(Parser)]
#[command(
    name = "suq11",
    version,
    about = "Exact computations on the quantum group SU_q(1,1), its exterior calculus, and the gauge Laplacians of the quantum hyperboloid"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize an expression and print its canonical form
    Eval { expr: String },
    /// Apply the exterior differential
    #[command(name = "d")]
    Differential { expr: String },
    /// Apply the canonical covariant derivative to a horizontal form
    #[command(name = "D")]
    Covariant { expr: String },
    /// Apply the star involution
    Star { expr: String },
    /// Apply the left Hodge operator to a base form
    Hodge { expr: String },
    /// Apply a gauge Laplacian to a weight-n algebra element
    Laplacian {
        /// Which of the two Laplacians to apply
        #[arg(long, value_enum)]
        side: Side,
        /// Weight of the section the expression lives in
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        expr: String,
    },
    /// Print one eigenvalue table as CSV or JSON rows
    Tables {
        /// Table number, 1 through 5
        #[arg(long)]
        which: u8,
        /// Weight of the line bundle
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
        /// Largest exponent enumerated; defaults to QH_BOUND or 4
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Also evaluate each eigenvalue at this rational value of q
        #[arg(long = "at-q", allow_negative_numbers = true)]
        at_q: Option<String>,
    },
    /// Apply the commutator of the two gauge Laplacians to a weight-n element
    Commutator {
        /// Weight of the section the expression lives in
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        expr: String,
    },
    /// Run invariant suites and report every check
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteChoice::All)]
        suite: SuiteChoice,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteChoice {
    Relations,
    Calculus,
    Bundles,
    Spectra,
    All,
}

#[derive(Debug)]
enum Failure {
    /// Bad input or an unmet precondition; the message goes to stderr.
    Usage(String),
    /// A verification suite failed; the report still goes to stdout.
    Verification(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// The exponent bound from `QH_BOUND`, defaulting to 4.
fn default_bound() -> Result<u32, Failure> {
    match std::env::var("QH_BOUND") {
        Ok(text) => text
            .parse()
            .map_err(|_| Failure::Usage(format!("QH_BOUND must be a small integer, got {text:?}"))),
        Err(_) => Ok(4),
    }
}

fn parsed(expr: &str) -> Result<Form, Failure> {
    parse_form(expr).map_err(usage)
}

/// The expression as a plain algebra element; rejects frame letters.
fn algebra_value(expr: &str) -> Result<crate::algebra::AlgElt, Failure> {
    let form = parsed(expr)?;
    if form.parts().any(|(w, _)| *w != EtaWord::UNIT) {
        return Err(Failure::Usage(format!(
            "expected an algebra element without frame letters, got {form}"
        )));
    }
    Ok(form.coefficient(EtaWord::UNIT))
}

fn section_value(expr: &str, n: i64) -> Result<Section, Failure> {
    Section::new(algebra_value(expr)?, n).map_err(usage)
}

fn execute(cli: Cli) -> Result<String, Failure> {
    let mut out = String::new();
    match cli.command {
        Command::Eval { expr } => {
            let _ = writeln!(out, "{}", parsed(&expr)?);
        }
        Command::Differential { expr } => {
            let _ = writeln!(out, "{}", parsed(&expr)?.differential());
        }
        Command::Covariant { expr } => {
            let value = covariant_derivative(&parsed(&expr)?).map_err(usage)?;
            let _ = writeln!(out, "{value}");
        }
        Command::Star { expr } => {
            let _ = writeln!(out, "{}", parsed(&expr)?.star());
        }
        Command::Hodge { expr } => {
            let value = hodge_left(&parsed(&expr)?).map_err(usage)?;
            let _ = writeln!(out, "{value}");
        }
        Command::Laplacian { side, n, expr } => {
            let section = section_value(&expr, n)?;
            let omega = Qpc::canonical();
            let image = match side {
                Side::Left => gauge_laplacian_left(&omega, &section),
                Side::Right => gauge_laplacian_right(&omega, &section),
            };
            let _ = writeln!(out, "{}", image.value());
        }
        Command::Commutator { n, expr } => {
            let section = section_value(&expr, n)?;
            let _ = writeln!(out, "{}", gauge_commutator(&section).value());
        }
        Command::Tables { which, n, bound, format, at_q } => {
            let bound = match bound {
                Some(b) => b,
                None => default_bound()?,
            };
            let q0 = match at_q {
                Some(text) => Some(text.parse::<Rational>().map_err(|e| {
                    Failure::Usage(format!("--at-q expects a rational like 1/2: {e}"))
                })?),
                None => None,
            };
            let rows = spectrum_table(which, n, bound).map_err(usage)?;
            write_table(&mut out, &rows, format, q0.as_ref())?;
        }
        Command::Verify { suite } => {
            let bound = default_bound()?;
            let suites: &[Suite] = match suite {
                SuiteChoice::Relations => &[Suite::Relations],
                SuiteChoice::Calculus => &[Suite::Calculus],
                SuiteChoice::Bundles => &[Suite::Bundles],
                SuiteChoice::Spectra => &[Suite::Spectra],
                SuiteChoice::All => &Suite::ALL,
            };
            let mut all_passed = true;
            for suite in suites {
                let report = run_suite(*suite, bound);
                for check in &report.checks {
                    let status = if check.passed { "pass" } else { "fail" };
                    let _ = writeln!(out, "[{}] {}: {}", report.suite, check.name, status);
                }
                let _ = writeln!(
                    out,
                    "{}: {} passed, {} failed",
                    report.suite,
                    report.passed(),
                    report.failed()
                );
                all_passed &= report.all_passed();
            }
            if !all_passed {
                return Err(Failure::Verification(out));
            }
        }
    }
    Ok(out)
}

/// One printed table row; `at_q` appears only when requested.
#[derive(Serialize)]
struct PrintedRow<'a> {
    table: u8,
    n: i64,
    family: &'a str,
    t: i64,
    k: u32,
    l: u32,
    eigenvalue: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    at_q: Option<String>,
}

fn printed_row<'a>(row: &'a SpectrumRow, q0: Option<&Rational>) -> Result<PrintedRow<'a>, Failure> {
    let at_q = match q0 {
        Some(q0) => Some(
            row.eigenvalue
                .eval(q0)
                .map_err(|e| {
                    Failure::Usage(format!(
                        "row t={} k={} l={} cannot be evaluated: {e}",
                        row.t, row.k, row.l
                    ))
                })?
                .to_string(),
        ),
        None => None,
    };
    Ok(PrintedRow {
        table: row.table,
        n: row.n,
        family: row.family.as_str(),
        t: row.t,
        k: row.k,
        l: row.l,
        eigenvalue: row.eigenvalue.to_string(),
        at_q,
    })
}

fn write_table(
    out: &mut String,
    rows: &[SpectrumRow],
    format: TableFormat,
    q0: Option<&Rational>,
) -> Result<(), Failure> {
    match format {
        TableFormat::Csv => {
            let header = if q0.is_some() {
                "table,n,family,t,k,l,eigenvalue,at_q"
            } else {
                "table,n,family,t,k,l,eigenvalue"
            };
            let _ = writeln!(out, "{header}");
            for row in rows {
                let p = printed_row(row, q0)?;
                let mut fields = vec![
                    p.table.to_string(),
                    p.n.to_string(),
                    p.family.to_string(),
                    p.t.to_string(),
                    p.k.to_string(),
                    p.l.to_string(),
                    p.eigenvalue,
                ];
                if let Some(value) = p.at_q {
                    fields.push(value);
                }
                let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                let _ = writeln!(out, "{}", line.join(","));
            }
        }
        TableFormat::Json => {
            for row in rows {
                let p = printed_row(row, q0)?;
                let _ = writeln!(out, "{}", serde_json::to_string(&p).expect("row serializes"));
            }
        }
    }
    Ok(())
}

/// Quotes a field when it holds a comma, quote, or line break.
fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}
