//! Command-line front end: `psi`, `table`, `verify` and `count`.
//!
//! Exit codes: 0 success, 1 verification failure or internal inconsistency,
//! 2 usage error, 3 resource bound.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::closedform::FormulaVariant;
use crate::error::Error;
use crate::groups::GroupTable;
use crate::report::{compute, reference_table, CensusReport, GroupSpec, Method, OutputFormat, Relation, CSV_HEADER};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cayley-census",
    version,
    about = "Count Cayley graphs of finite groups up to equivalence"
)]
struct Cli {
    /// Worker threads for parallel sections.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Use the formulas exactly as printed instead of the corrected forms.
    #[arg(long, global = true)]
    literal_formulas: bool,

    /// Report timings on standard error.
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Census polynomial of one group.
    Psi(GroupArgs),
    /// Census polynomials of Z_n for n = 2..max-n.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Number of classes of one group.
    Count(GroupArgs),
}

#[derive(Debug, Args)]
struct GroupArgs {
    /// zn:N, dn:N, product:SPEC,SPEC,... or table-file:PATH
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value_t = Relation::Weak)]
    relation: Relation,
    #[arg(long, value_enum, default_value_t = Method::Burnside)]
    method: Method,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, default_value_t = 20)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Relation::Weak)]
    relation: Relation,
    #[arg(long, value_enum, default_value_t = Method::Burnside)]
    method: Method,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 20)]
    max_n: usize,
}

enum Failure {
    Error(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_resource() {
        EXIT_RESOURCE
    } else if e.is_internal() {
        EXIT_FAILURE
    } else {
        EXIT_USAGE
    }
}

/// Parses `args` (program name first) and runs the command, writing data
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    if cli.threads == 0 {
        let _ = writeln!(err, "error: --threads must be at least 1");
        return EXIT_USAGE;
    }
    // the global pool can be configured once per process
    let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();

    let start = Instant::now();
    let result = dispatch(&cli, out, err);
    if cli.verbose {
        let _ = writeln!(err, "elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let variant = if cli.literal_formulas {
        FormulaVariant::Literal
    } else {
        FormulaVariant::Corrected
    };
    match &cli.command {
        Command::Psi(a) => {
            let report = census(a, variant)?;
            let text = match a.format {
                OutputFormat::Text => report.text(),
                OutputFormat::Csv => format!("{CSV_HEADER}\n{}", report.csv_row()),
                OutputFormat::Json => report.json(),
            };
            writeln!(out, "{text}")?;
        }
        Command::Count(a) => {
            let report = census(a, variant)?;
            match a.format {
                OutputFormat::Json => writeln!(out, "{{\"group\":{:?},\"count\":\"{}\"}}", report.group, report.count)?,
                _ => writeln!(out, "{}", report.count)?,
            }
        }
        Command::Table(a) => table(a, variant, out)?,
        Command::Verify(a) => {
            let started = Instant::now();
            let report = run_suite(a.suite, a.max_n)?;
            writeln!(out, "{report}")?;
            if cli.verbose {
                writeln!(err, "suite time: {:.3} s", started.elapsed().as_secs_f64())?;
            }
            if report.failed() {
                return Ok(EXIT_FAILURE);
            }
        }
    }
    Ok(EXIT_OK)
}

fn census(a: &GroupArgs, variant: FormulaVariant) -> Result<CensusReport, Failure> {
    let spec: GroupSpec = a.group.parse()?;
    let group = spec.build()?;
    require_nontrivial(&group)?;
    let poly = compute(Some(&spec), &group, a.relation, a.method, variant)?;
    Ok(CensusReport::new(&group, a.relation, a.method, poly))
}

fn require_nontrivial(group: &GroupTable) -> Result<(), Failure> {
    if group.order() < 2 {
        return Err(Failure::Usage("group must have order ≥ 2".into()));
    }
    Ok(())
}

fn table(a: &TableArgs, variant: FormulaVariant, out: &mut dyn Write) -> Result<(), Failure> {
    if a.max_n < 2 {
        return Err(Failure::Usage("--max-n must be at least 2".into()));
    }
    let reference = reference_table(a.relation);
    let rows = (2..=a.max_n)
        .into_par_iter()
        .map(|n| -> Result<CensusReport, Error> {
            let spec = GroupSpec::Cyclic(n);
            let group = spec.build()?;
            let poly = compute(Some(&spec), &group, a.relation, a.method, variant)?;
            let report = CensusReport::new(&group, a.relation, a.method, poly);
            Ok(match reference.iter().find(|r| r.n == n) {
                Some(r) if r.poly == report.poly && r.count == report.count => report.with_verdict("match"),
                Some(r) => {
                    let diff = &report.poly - &r.poly;
                    report.with_verdict(format!(
                        "mismatch: published {} ({}), difference {diff}",
                        r.printed, r.count
                    ))
                }
                None => report,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    match a.format {
        OutputFormat::Text => {
            for r in &rows {
                writeln!(out, "{}", r.table_text())?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in &rows {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        OutputFormat::Json => {
            let body: Vec<String> = rows.iter().map(CensusReport::json).collect();
            writeln!(out, "[{}]", body.join(","))?;
        }
    }
    Ok(())
}
