use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::grid::Label;
use super::timing::TimingPolicy;

/// Published best-case speedup band for the accelerated sweep. Printed next
/// to the measured figure for comparison only.
pub const REFERENCE_SPEEDUP_BAND: &str = "10-15% at best";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n_label: Label,
    pub m_label: Label,
    pub graphs: usize,
    pub t_classic_ms: f64,
    pub t_accel_ms: f64,
    pub sweeps_classic_total: u64,
    pub sweeps_accel_total: u64,
    pub relaxations_classic_total: u64,
    pub relaxations_accel_total: u64,
    pub mismatches: usize,
}

impl BenchRow {
    pub fn mean_sweeps_classic(&self) -> f64 {
        self.sweeps_classic_total as f64 / self.graphs as f64
    }

    pub fn mean_sweeps_accel(&self) -> f64 {
        self.sweeps_accel_total as f64 / self.graphs as f64
    }

    pub fn mean_relaxations_classic(&self) -> f64 {
        self.relaxations_classic_total as f64 / self.graphs as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub environment: String,
    pub spec_echo: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidParameter(format!(
                "unknown format {s:?} (expected md or csv)"
            ))),
        }
    }
}

/// Percentage of classic time saved by the accelerated solver over the whole
/// report: `100 * (1 - sum(t_accel) / sum(t_classic))`.
pub fn aggregate_speedup(report: &BenchReport) -> Result<f64> {
    let classic: f64 = report.rows.iter().map(|r| r.t_classic_ms).sum();
    let accel: f64 = report.rows.iter().map(|r| r.t_accel_ms).sum();
    if classic <= 0.0 {
        return Err(Error::UndefinedSpeedup);
    }
    Ok(100.0 * (1.0 - accel / classic))
}

pub fn environment_note(policy: TimingPolicy) -> String {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    format!(
        "{date}; {os}/{arch}, {threads} hardware threads; \
         times are the minimum of {repeats} passes over the whole set on a monotonic clock; \
         the timed region covers solver calls only (file reading and cost-matrix construction excluded)",
        date = chrono::Utc::now().format("%Y-%m-%d"),
        os = std::env::consts::OS,
        arch = std::env::consts::ARCH,
        repeats = policy.repeats,
    )
}

const CSV_HEADER: [&str; 10] = [
    "n",
    "m",
    "graphs",
    "t_BK_ms",
    "t_BKaccelerat_ms",
    "sweeps_BK",
    "sweeps_BKaccelerat",
    "relaxations_BK",
    "relaxations_BKaccelerat",
    "mismatches",
];

pub fn emit_table(report: &BenchReport, format: Format) -> String {
    match format {
        Format::Csv => emit_csv(&report.rows),
        Format::Markdown => emit_markdown(report),
    }
}

fn emit_csv(rows: &[BenchRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("write to memory");
    for r in rows {
        w.write_record([
            r.n_label.to_string(),
            r.m_label.to_string(),
            r.graphs.to_string(),
            format!("{:.3}", r.t_classic_ms),
            format!("{:.3}", r.t_accel_ms),
            r.sweeps_classic_total.to_string(),
            r.sweeps_accel_total.to_string(),
            r.relaxations_classic_total.to_string(),
            r.relaxations_accel_total.to_string(),
            r.mismatches.to_string(),
        ])
        .expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii output")
}

/// Parses CSV produced by [`emit_table`].
pub fn parse_csv(text: &str) -> Result<Vec<BenchRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| Error::Report(e.to_string()))?
        .clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Report(format!("unexpected header {header:?}")));
    }
    reader
        .records()
        .map(|rec| {
            let rec = rec.map_err(|e| Error::Report(e.to_string()))?;
            let field = |k: usize| -> &str { &rec[k] };
            fn num<T: FromStr>(s: &str) -> Result<T> {
                s.parse()
                    .map_err(|_| Error::Report(format!("bad number {s:?}")))
            }
            Ok(BenchRow {
                n_label: field(0).parse()?,
                m_label: field(1).parse()?,
                graphs: num(field(2))?,
                t_classic_ms: num(field(3))?,
                t_accel_ms: num(field(4))?,
                sweeps_classic_total: num(field(5))?,
                sweeps_accel_total: num(field(6))?,
                relaxations_classic_total: num(field(7))?,
                relaxations_accel_total: num(field(8))?,
                mismatches: num(field(9))?,
            })
        })
        .collect()
}

fn emit_markdown(report: &BenchReport) -> String {
    let mut out = String::new();
    out.push_str(
        "| n | m | graphs | t_BK | t_BKaccelerat | sweeps_BK | sweeps_BKaccelerat | relaxations_BK | relaxations_BKaccelerat | mismatches |\n",
    );
    out.push_str("|---|---|---:|---:|---:|---:|---:|---:|---:|---:|\n");
    let mut previous_n = None;
    for r in &report.rows {
        // n is printed once per block
        let n = if previous_n == Some(r.n_label) {
            String::new()
        } else {
            r.n_label.to_string()
        };
        previous_n = Some(r.n_label);
        writeln!(
            out,
            "| {n} | {} | {} | {:.3} | {:.3} | {} | {} | {} | {} | {} |",
            r.m_label,
            r.graphs,
            r.t_classic_ms,
            r.t_accel_ms,
            r.sweeps_classic_total,
            r.sweeps_accel_total,
            r.relaxations_classic_total,
            r.relaxations_accel_total,
            r.mismatches
        )
        .unwrap();
    }
    out.push('\n');
    out.push_str("Times in milliseconds for the whole set of graphs in each row.\n\n");
    match aggregate_speedup(report) {
        Ok(s) => writeln!(out, "aggregate speedup: {s:.2}%").unwrap(),
        Err(_) => out.push_str("aggregate speedup: undefined\n"),
    }
    writeln!(
        out,
        "reference speedup band: {REFERENCE_SPEEDUP_BAND} (hardware-dependent; not asserted)"
    )
    .unwrap();
    writeln!(out, "spec: {}", report.spec_echo).unwrap();
    writeln!(out, "environment: {}", report.environment).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(t_classic: f64, t_accel: f64) -> BenchRow {
        BenchRow {
            n_label: Label::Fixed(10),
            m_label: Label::Interval(1, 100),
            graphs: 4,
            t_classic_ms: t_classic,
            t_accel_ms: t_accel,
            sweeps_classic_total: 9,
            sweeps_accel_total: 7,
            relaxations_classic_total: 810,
            relaxations_accel_total: 630,
            mismatches: 0,
        }
    }

    fn report(rows: Vec<BenchRow>) -> BenchReport {
        BenchReport {
            rows,
            environment: "test".into(),
            spec_echo: "n=10".into(),
        }
    }

    #[test]
    fn speedup_arithmetic() {
        let r = report(vec![row(100.0, 90.0), row(100.0, 90.0)]);
        assert!((aggregate_speedup(&r).unwrap() - 10.0).abs() < 1e-9);
        let r = report(vec![row(3410.0, 3190.0)]);
        assert!((aggregate_speedup(&r).unwrap() - 6.451_612_903).abs() < 1e-6);
        let r = report(vec![row(50.0, 50.0)]);
        assert_eq!(aggregate_speedup(&r).unwrap(), 0.0);
        let r = report(vec![row(0.0, 0.0)]);
        assert!(matches!(
            aggregate_speedup(&r),
            Err(Error::UndefinedSpeedup)
        ));
    }

    #[test]
    fn csv_shape() {
        let text = emit_table(&report(vec![row(1.5, 1.25)]), Format::Csv);
        assert_eq!(text.lines().count(), 2);
        assert!(!text.contains('\r'));
        assert!(text.starts_with("n,m,graphs,t_BK_ms,t_BKaccelerat_ms,"));
        assert_eq!(parse_csv(&text).unwrap(), vec![row(1.5, 1.25)]);
    }

    #[test]
    fn markdown_shape() {
        let text = emit_table(
            &report(vec![row(100.0, 90.0), row(80.0, 70.0)]),
            Format::Markdown,
        );
        assert!(text.contains("t_BK"));
        assert!(text.contains("t_BKaccelerat"));
        assert!(text.contains("| 10 | 1-100 |"));
        assert!(text.contains("|  | 1-100 |"));
        assert!(text.contains("aggregate speedup: 11.11%"));
        assert!(text.contains(REFERENCE_SPEEDUP_BAND));
    }

    #[test]
    fn csv_header_checked() {
        assert!(parse_csv("a,b\n1,2\n").is_err());
    }
}
