//! Time both solvers over one fixed-size graph set and print the report row
//! as markdown and CSV.
//!
//! ```bash
//! cargo run --release -p bkroute --example benchmark_set
//! ```

use bkroute::bench::{
    aggregate_speedup, bench_set, emit_table, environment_note, BenchReport, Format, Label,
    TimingPolicy,
};
use bkroute::generator::{generate_set, GenSpec};

fn main() -> Result<(), bkroute::Error> {
    let spec = GenSpec::fixed(90, 1000, 1000, 11);
    let graphs = generate_set(&spec)?;
    let policy = TimingPolicy::default();
    let row = bench_set(&graphs, Label::Fixed(90), Label::Fixed(1000), policy)?;
    let report = BenchReport {
        rows: vec![row],
        environment: environment_note(policy),
        spec_echo: format!("{spec:?}"),
    };
    println!("{}", emit_table(&report, Format::Markdown));
    println!("{}", emit_table(&report, Format::Csv));
    println!("speedup {:.2}%", aggregate_speedup(&report)?);
    Ok(())
}
