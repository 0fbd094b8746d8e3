//! Run the fixed-value and interval-type comparison grids.
//!
//! ```bash
//! cargo run --release -p bkroute --example comparison_tables -- 100
//! ```
//! The optional argument is the number of graphs per cell (default 20).

use bkroute::bench::{emit_table, run_grid, Format, Grid, TimingPolicy};

fn main() -> Result<(), bkroute::Error> {
    let count = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(20);
    for grid in [Grid::Table1, Grid::Table2] {
        let report = run_grid(grid, count, 1, TimingPolicy::default())?;
        println!("## {grid} ({count} graphs per cell)\n");
        println!("{}", emit_table(&report, Format::Markdown));
    }
    Ok(())
}
