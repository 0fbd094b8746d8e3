//! Bellman-Kalaba cost-to-target iteration.
//!
//! Both solvers iterate the min-plus product `v <- A (x) v` on the cost
//! matrix until the vector stops changing. Entry `i` of `v` holds the best
//! known cost from node `i` to node `n`. The iteration starts from the
//! min-plus unit vector `(inf, ..., inf, 0)`, so the first sweep yields the
//! last column of `A` and after `k` sweeps entry `i` is the cheapest route of
//! at most `k` arcs.
//!
//! * [`bk_classic`] is the Jacobi form: every row reads the previous sweep's
//!   vector.
//! * [`bk_accelerated`] is the Gauss-Seidel form: rows are processed from
//!   `n - 1` down to `1`, in place, so row `i` already sees the refreshed
//!   values of rows `i + 1 ..= n - 1`.
//!
//! Every sweep evaluates `n` candidate terms for each of the `n - 1` free
//! rows; that count is reported as `relaxations`. The sweep that detects no
//! change is included in `sweeps`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::CostMatrix;
use crate::weight::{ext_add, ExtWeight, Finite, Infinite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Classic,
    Accelerated,
}

impl Method {
    pub const ALL: [Method; 2] = [Method::Classic, Method::Accelerated];

    pub fn name(self) -> &'static str {
        match self {
            Method::Classic => "classic",
            Method::Accelerated => "accelerated",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Cost-to-target per node. Indexing through [`DistanceVector::get`] is
/// 1-based; the slice view is 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceVector(Vec<ExtWeight>);

impl DistanceVector {
    pub fn new(values: Vec<ExtWeight>) -> Self {
        DistanceVector(values)
    }

    /// Builds a vector from `Some(cost)` / `None` (unreachable) entries.
    pub fn from_options(values: &[Option<u64>]) -> Self {
        DistanceVector(values.iter().map(|v| v.map_or(Infinite, Finite)).collect())
    }

    #[inline]
    pub fn get(&self, node: usize) -> ExtWeight {
        self.0[node - 1]
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[ExtWeight] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<ExtWeight> {
        self.0
    }
}

impl fmt::Display for DistanceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub distances: DistanceVector,
    pub sweeps: usize,
    pub relaxations: u64,
    pub converged: bool,
    pub method: Method,
}

impl SolveResult {
    /// Cost from node 1 to node n.
    pub fn route_cost(&self) -> ExtWeight {
        self.distances.get(1)
    }
}

pub fn bk_classic(a: &CostMatrix) -> Result<SolveResult> {
    iterate(a, Method::Classic, |_| {})
}

pub fn bk_accelerated(a: &CostMatrix) -> Result<SolveResult> {
    iterate(a, Method::Accelerated, |_| {})
}

pub fn solve(a: &CostMatrix, method: Method) -> Result<SolveResult> {
    iterate(a, method, |_| {})
}

/// Like [`solve`], also returning the starting vector followed by the vector
/// after each sweep (so the trace has `sweeps + 1` entries).
pub fn solve_traced(a: &CostMatrix, method: Method) -> Result<(SolveResult, Vec<DistanceVector>)> {
    let mut trace = Vec::new();
    let result = iterate(a, method, |v| trace.push(DistanceVector(v.to_vec())))?;
    Ok((result, trace))
}

fn iterate(
    a: &CostMatrix,
    method: Method,
    mut observe: impl FnMut(&[ExtWeight]),
) -> Result<SolveResult> {
    let n = a.node_count();
    let target = n - 1;
    let per_sweep = (target as u64) * (n as u64);

    let mut v = vec![Infinite; n];
    v[target] = Finite(0);
    let mut scratch = v.clone();
    observe(&v);

    let mut sweeps = 0;
    let mut relaxations = 0u64;
    loop {
        sweeps += 1;
        relaxations += per_sweep;
        let changed = match method {
            Method::Classic => {
                let changed = jacobi_sweep(a, &v, &mut scratch);
                std::mem::swap(&mut v, &mut scratch);
                changed
            }
            Method::Accelerated => gauss_seidel_sweep(a, &mut v),
        };
        observe(&v);
        if !changed {
            break;
        }
        // Non-negative weights reach the fixed point after at most n - 1
        // productive sweeps; anything beyond means the input is corrupt.
        if sweeps >= n {
            return Err(Error::NotConverged {
                method: method.name(),
                limit: n,
            });
        }
    }

    Ok(SolveResult {
        distances: DistanceVector(v),
        sweeps,
        relaxations,
        converged: true,
        method,
    })
}

#[inline]
fn row_min(row: &[ExtWeight], v: &[ExtWeight]) -> ExtWeight {
    row.iter()
        .zip(v)
        .fold(Infinite, |best, (&a, &x)| best.min(ext_add(a, x)))
}

fn jacobi_sweep(a: &CostMatrix, prev: &[ExtWeight], next: &mut [ExtWeight]) -> bool {
    let target = prev.len() - 1;
    let mut changed = false;
    for i in 0..target {
        let value = row_min(a.row0(i), prev);
        debug_assert!(value <= prev[i], "estimate increased at row {}", i + 1);
        changed |= value != prev[i];
        next[i] = value;
    }
    next[target] = Finite(0);
    changed
}

fn gauss_seidel_sweep(a: &CostMatrix, v: &mut [ExtWeight]) -> bool {
    let target = v.len() - 1;
    let mut changed = false;
    for i in (0..target).rev() {
        let value = row_min(a.row0(i), v);
        debug_assert!(value <= v[i], "estimate increased at row {}", i + 1);
        if value != v[i] {
            changed = true;
            v[i] = value;
        }
    }
    changed
}
