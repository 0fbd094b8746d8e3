use std::fmt;

use rayon::prelude::*;

use crate::graph::{build_cost_matrix, Graph};
use crate::oracle::{brute_force_distance, oracle_distances};
use crate::solver::{bk_accelerated, bk_classic, DistanceVector};

/// Graphs up to this size are also checked against path enumeration.
pub const BRUTE_FORCE_CHECK_MAX_NODES: usize = 8;

/// Number of leading graphs whose distance vectors are kept for display.
pub const SAMPLE_COUNT: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MismatchKind {
    /// Jacobi and Gauss-Seidel fixed points differ.
    ClassicVsAccelerated,
    /// A solver disagrees with the arc-list oracle.
    SolverVsOracle,
    /// `distances[1]` disagrees with simple-path enumeration.
    BruteForce,
    SolverError(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub kind: MismatchKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub graphs: usize,
    pub mismatches: Vec<Mismatch>,
    /// `(index, distances)` of the first few graphs.
    pub samples: Vec<(usize, DistanceVector)>,
}

impl VerifySummary {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs checked: {}", self.graphs)?;
        for (index, d) in &self.samples {
            writeln!(f, "graph #{index}: distances {d}")?;
        }
        writeln!(f, "mismatches: {}", self.mismatches.len())?;
        for m in &self.mismatches {
            writeln!(f, "  graph #{}: {:?}", m.index, m.kind)?;
        }
        Ok(())
    }
}

/// Checks every graph: classic == accelerated == arc-list oracle, and for
/// small graphs `distances[1]` == brute-force enumeration. Graphs are
/// checked in parallel.
pub fn verify_equivalence(graphs: &[Graph]) -> VerifySummary {
    let per_graph: Vec<(Vec<Mismatch>, DistanceVector)> = graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| check_graph(index, g))
        .collect();

    let mut summary = VerifySummary {
        graphs: graphs.len(),
        ..Default::default()
    };
    for (index, (mismatches, distances)) in per_graph.into_iter().enumerate() {
        summary.mismatches.extend(mismatches);
        if index < SAMPLE_COUNT {
            summary.samples.push((index, distances));
        }
    }
    summary
}

fn check_graph(index: usize, g: &Graph) -> (Vec<Mismatch>, DistanceVector) {
    let oracle = oracle_distances(g);
    let mismatch = |kind| Mismatch { index, kind };
    let solved = build_cost_matrix(g).and_then(|a| Ok((bk_classic(&a)?, bk_accelerated(&a)?)));
    let (classic, accel) = match solved {
        Ok(pair) => pair,
        Err(e) => {
            return (
                vec![mismatch(MismatchKind::SolverError(e.to_string()))],
                oracle,
            )
        }
    };

    let mut found = Vec::new();
    if classic.distances != accel.distances {
        found.push(mismatch(MismatchKind::ClassicVsAccelerated));
    }
    if classic.distances != oracle || accel.distances != oracle {
        found.push(mismatch(MismatchKind::SolverVsOracle));
    }
    if g.node_count() <= BRUTE_FORCE_CHECK_MAX_NODES {
        match brute_force_distance(g) {
            Ok(d) if d == classic.distances.get(1) => {}
            _ => found.push(mismatch(MismatchKind::BruteForce)),
        }
    }
    (found, classic.distances)
}
