use std::hint::black_box;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{build_cost_matrix, CostMatrix, Graph};
use crate::solver::{solve, Method};

/// How a graph set is timed: the whole set is solved `repeats` times on the
/// monotonic clock and the fastest pass is kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimingPolicy {
    pub repeats: u32,
}

impl Default for TimingPolicy {
    fn default() -> Self {
        TimingPolicy { repeats: 3 }
    }
}

impl TimingPolicy {
    pub fn new(repeats: u32) -> Result<Self> {
        if repeats == 0 {
            return Err(Error::InvalidParameter("repeats must be at least 1".into()));
        }
        Ok(TimingPolicy { repeats })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Timing {
    /// Fastest full-set pass, milliseconds.
    pub elapsed_ms: f64,
    pub sweeps: u64,
    pub relaxations: u64,
}

/// Times one solver over a whole set. Cost matrices are built before the
/// clock starts.
pub fn time_solver(graphs: &[Graph], method: Method, policy: TimingPolicy) -> Result<Timing> {
    let matrices = build_matrices(graphs)?;
    time_matrices(&matrices, method, policy)
}

pub fn build_matrices(graphs: &[Graph]) -> Result<Vec<CostMatrix>> {
    graphs
        .iter()
        .enumerate()
        .map(|(index, g)| {
            build_cost_matrix(g).map_err(|e| Error::Solver {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}

pub fn time_matrices(
    matrices: &[CostMatrix],
    method: Method,
    policy: TimingPolicy,
) -> Result<Timing> {
    if matrices.is_empty() {
        return Err(Error::InvalidParameter(
            "cannot time an empty graph set".into(),
        ));
    }
    if policy.repeats == 0 {
        return Err(Error::InvalidParameter("repeats must be at least 1".into()));
    }

    let mut best = f64::INFINITY;
    let mut totals = (0u64, 0u64);
    for _ in 0..policy.repeats {
        let mut sweeps = 0u64;
        let mut relaxations = 0u64;
        let start = Instant::now();
        for (index, a) in matrices.iter().enumerate() {
            let res = solve(black_box(a), method).map_err(|e| Error::Solver {
                index,
                source: Box::new(e),
            })?;
            sweeps += res.sweeps as u64;
            relaxations += res.relaxations;
            black_box(&res.distances);
        }
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        best = best.min(elapsed);
        totals = (sweeps, relaxations);
    }
    Ok(Timing {
        elapsed_ms: best,
        sweeps: totals.0,
        relaxations: totals.1,
    })
}
