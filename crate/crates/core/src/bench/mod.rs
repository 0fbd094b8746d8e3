//! Set-level comparison of the two solvers: timing, verification and the
//! report grids.

mod grid;
mod report;
mod timing;
mod verify;

pub use grid::{Cell, Grid, Label};
pub use report::{
    aggregate_speedup, emit_table, environment_note, parse_csv, BenchReport, BenchRow, Format,
    REFERENCE_SPEEDUP_BAND,
};
pub use timing::{build_matrices, time_matrices, time_solver, Timing, TimingPolicy};
pub use verify::{
    verify_equivalence, Mismatch, MismatchKind, VerifySummary, BRUTE_FORCE_CHECK_MAX_NODES,
};

use crate::error::Result;
use crate::generator::{derive_seed, generate_set, GenSpec};
use crate::graph::Graph;
use crate::solver::Method;

/// Verifies and times one graph set, producing a single report row.
pub fn bench_set(
    graphs: &[Graph],
    n_label: Label,
    m_label: Label,
    policy: TimingPolicy,
) -> Result<BenchRow> {
    let summary = verify_equivalence(graphs);
    let matrices = build_matrices(graphs)?;
    let classic = time_matrices(&matrices, Method::Classic, policy)?;
    let accel = time_matrices(&matrices, Method::Accelerated, policy)?;
    Ok(BenchRow {
        n_label,
        m_label,
        graphs: graphs.len(),
        t_classic_ms: classic.elapsed_ms,
        t_accel_ms: accel.elapsed_ms,
        sweeps_classic_total: classic.sweeps,
        sweeps_accel_total: accel.sweeps,
        relaxations_classic_total: classic.relaxations,
        relaxations_accel_total: accel.relaxations,
        mismatches: summary.mismatches.len(),
    })
}

/// The generation spec of cell `index` of a grid run.
pub fn cell_spec(cell: Cell, index: usize, count: usize, seed: u64) -> GenSpec {
    GenSpec::interval(
        cell.n.bounds(),
        cell.m.bounds(),
        count,
        derive_seed(seed, index as u64),
    )
}

/// Generates, verifies and times every cell of a grid, one row per cell.
/// Cells are timed one after another.
pub fn run_grid(grid: Grid, count: usize, seed: u64, policy: TimingPolicy) -> Result<BenchReport> {
    let mut rows = Vec::new();
    for (index, cell) in grid.cells().into_iter().enumerate() {
        let graphs = generate_set(&cell_spec(cell, index, count, seed))?;
        rows.push(bench_set(&graphs, cell.n, cell.m, policy)?);
    }
    Ok(BenchReport {
        rows,
        environment: environment_note(policy),
        spec_echo: format!(
            "grid={grid} count={count} seed={seed} weight_max={}",
            crate::generator::DEFAULT_WEIGHT_MAX
        ),
    })
}
