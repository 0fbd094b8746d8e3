//! Command-line front end: `generate`, `verify`, `bench` and `table`.
//!
//! Exit status: 0 on success, 1 on runtime or data errors (including
//! verification mismatches), 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::bench::{
    aggregate_speedup, bench_set, emit_table, environment_note, run_grid, verify_equivalence,
    Format, Grid, Label, TimingPolicy,
};
use crate::error::Error;
use crate::generator::{generate_set_with_summary, GenSpec, DEFAULT_WEIGHT_MAX};
use crate::graphset::{read_set, write_set};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Inclusive `LO..HI` range flag value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for Bounds {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
        let parse = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| format!("{v:?} is not a non-negative integer"))
        };
        let bounds = Bounds {
            lo: parse(lo)?,
            hi: parse(hi)?,
        };
        if bounds.lo > bounds.hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(bounds)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bkroute",
    version,
    about = "Bellman-Kalaba shortest-route solvers and benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a seeded graph set and write it as a BKSET file.
    Generate(GenerateArgs),
    /// Check classic, accelerated and oracle distances on every graph of a set.
    Verify(VerifyArgs),
    /// Time both solvers over a set and print a one-row report.
    Bench(BenchArgs),
    /// Run a full comparison grid and print the multi-row report.
    Table(TableArgs),
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Node count range
    #[arg(long = "n", value_name = "LO..HI")]
    nodes: Bounds,
    /// Arc count range (clamped to n(n-1) per graph)
    #[arg(long = "m", value_name = "LO..HI")]
    arcs: Bounds,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_WEIGHT_MAX)]
    weight_max: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct ReportArgs {
    /// Timed passes per set; the fastest is reported
    #[arg(long, default_value_t = 3)]
    repeats: u32,
    #[arg(long, default_value = "md", value_parser = ["md", "csv"])]
    format: String,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_parser = ["table1", "table2"])]
    grid: String,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    report: ReportArgs,
}

enum Failure {
    Usage(String),
    Runtime(Error),
    /// Already reported; only the exit status remains.
    Silent(i32),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Generate(a) => cmd_generate(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Bench(a) => cmd_bench(a, stdout),
        Command::Table(a) => cmd_table(a, stdout),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAILURE
        }
        Err(Failure::Silent(code)) => code,
    }
}

fn cmd_generate(a: GenerateArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let spec = GenSpec {
        n1: a.nodes.lo,
        n2: a.nodes.hi,
        m1: a.arcs.lo,
        m2: a.arcs.hi,
        count: a.count,
        seed: a.seed,
        weight_max: a.weight_max,
    };
    spec.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let (graphs, summary) = generate_set_with_summary(&spec)?;
    write_set(&graphs, &spec, &a.out)?;
    let _ = writeln!(
        stdout,
        "wrote {} graphs to {} ({} with arc count clamped to n(n-1))",
        summary.graphs,
        a.out.display(),
        summary.clamped
    );
    Ok(())
}

fn cmd_verify(a: VerifyArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let (_, graphs) = read_set(&a.input)?;
    let summary = verify_equivalence(&graphs);
    let _ = write!(stdout, "{summary}");
    if summary.is_ok() {
        Ok(())
    } else {
        Err(Failure::Silent(EXIT_FAILURE))
    }
}

fn policy_and_format(r: &ReportArgs) -> Result<(TimingPolicy, Format), Failure> {
    let policy = TimingPolicy::new(r.repeats).map_err(|e| Failure::Usage(e.to_string()))?;
    let format = r
        .format
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    Ok((policy, format))
}

fn cmd_bench(a: BenchArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let (policy, format) = policy_and_format(&a.report)?;
    let (spec, graphs) = read_set(&a.input)?;
    if graphs.is_empty() {
        return Err(
            Error::InvalidParameter(format!("{} holds no graphs", a.input.display())).into(),
        );
    }
    let row = bench_set(
        &graphs,
        Label::from_bounds(spec.n1, spec.n2),
        Label::from_bounds(spec.m1, spec.m2),
        policy,
    )?;
    let mismatches = row.mismatches;
    let report = crate::bench::BenchReport {
        rows: vec![row],
        environment: environment_note(policy),
        spec_echo: format!(
            "file={} n={}..{} m={}..{} count={} seed={} weight_max={}",
            a.input.display(),
            spec.n1,
            spec.n2,
            spec.m1,
            spec.m2,
            spec.count,
            spec.seed,
            spec.weight_max
        ),
    };
    emit(
        &emit_table(&report, format),
        a.report.out.as_deref(),
        stdout,
    )?;
    if mismatches > 0 {
        return Err(Failure::Runtime(Error::InvalidParameter(format!(
            "{mismatches} result mismatches between solvers and oracle"
        ))));
    }
    Ok(())
}

fn cmd_table(a: TableArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let (policy, format) = policy_and_format(&a.report)?;
    let grid: Grid = a
        .grid
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    if a.count == 0 {
        return Err(Failure::Usage("--count must be at least 1".into()));
    }
    let report = run_grid(grid, a.count, a.seed, policy)?;
    emit(
        &emit_table(&report, format),
        a.report.out.as_deref(),
        stdout,
    )?;
    if let Some(path) = &a.report.out {
        let speedup = aggregate_speedup(&report)
            .map_or_else(|_| "undefined".to_string(), |s| format!("{s:.2}%"));
        let _ = writeln!(
            stdout,
            "wrote {} rows to {}; aggregate speedup: {speedup}",
            report.rows.len(),
            path.display()
        );
    }
    let mismatches: usize = report.rows.iter().map(|r| r.mismatches).sum();
    if mismatches > 0 {
        return Err(Failure::Runtime(Error::InvalidParameter(format!(
            "{mismatches} result mismatches between solvers and oracle"
        ))));
    }
    Ok(())
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::io(path, e).into()),
        None => {
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}
