//! Independent ground truth for the matrix solvers.
//!
//! Neither routine touches [`CostMatrix`](crate::graph::CostMatrix) or the
//! sweep code: [`oracle_distances`] relaxes the raw arc list, and
//! [`brute_force_distance`] enumerates every simple path.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::DistanceVector;
use crate::weight::{ExtWeight, Finite, Infinite};

/// Largest node count [`brute_force_distance`] accepts.
pub const BRUTE_FORCE_MAX_NODES: usize = 10;

/// All-nodes-to-`n` costs by repeated arc-list relaxation.
pub fn oracle_distances(g: &Graph) -> DistanceVector {
    let n = g.node_count();
    let mut dist: Vec<Option<u64>> = vec![None; n];
    dist[n - 1] = Some(0);
    loop {
        let mut changed = false;
        for arc in g.arcs() {
            let Some(tail) = dist[arc.to - 1] else {
                continue;
            };
            let candidate = tail + arc.weight;
            let slot = &mut dist[arc.from - 1];
            if slot.is_none_or(|d| candidate < d) {
                *slot = Some(candidate);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    DistanceVector::from_options(&dist)
}

/// Minimum weight over all simple paths from node 1 to node n.
pub fn brute_force_distance(g: &Graph) -> Result<ExtWeight> {
    brute_force_within(g, usize::MAX)
}

/// As [`brute_force_distance`], restricted to paths of at most `max_arcs`
/// arcs.
pub fn brute_force_within(g: &Graph, max_arcs: usize) -> Result<ExtWeight> {
    let n = g.node_count();
    if n > BRUTE_FORCE_MAX_NODES {
        return Err(Error::SizeLimit {
            n,
            limit: BRUTE_FORCE_MAX_NODES,
        });
    }
    let mut out: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for arc in g.arcs() {
        out[arc.from - 1].push((arc.to - 1, arc.weight));
    }
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut best = None;
    walk(&out, 0, 0, 0, max_arcs, &mut visited, &mut best);
    Ok(best.map_or(Infinite, Finite))
}

fn walk(
    out: &[Vec<(usize, u64)>],
    node: usize,
    cost: u64,
    depth: usize,
    max_arcs: usize,
    visited: &mut [bool],
    best: &mut Option<u64>,
) {
    if node == out.len() - 1 {
        if best.is_none_or(|b| cost < b) {
            *best = Some(cost);
        }
        return;
    }
    if depth == max_arcs {
        return;
    }
    for &(next, w) in &out[node] {
        if !visited[next] {
            visited[next] = true;
            walk(out, next, cost + w, depth + 1, max_arcs, visited, best);
            visited[next] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> Graph {
        Graph::from_triples(4, &[(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 10)]).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            oracle_distances(&chain()),
            DistanceVector::from_options(&[Some(3), Some(2), Some(1), Some(0)])
        );
        assert_eq!(
            oracle_distances(&Graph::new(3, []).unwrap()),
            DistanceVector::from_options(&[None, None, Some(0)])
        );
        assert_eq!(
            oracle_distances(&Graph::from_triples(2, &[(2, 1, 5)]).unwrap()),
            DistanceVector::from_options(&[None, Some(0)])
        );
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_distance(&chain()).unwrap(), Finite(3));
        assert_eq!(
            brute_force_distance(&Graph::new(2, []).unwrap()).unwrap(),
            Infinite
        );

        let complete = Graph::from_triples(
            3,
            &[
                (1, 2, 1),
                (1, 3, 1),
                (2, 1, 1),
                (2, 3, 1),
                (3, 1, 1),
                (3, 2, 1),
            ],
        )
        .unwrap();
        assert_eq!(brute_force_distance(&complete).unwrap(), Finite(1));
    }

    #[test]
    fn hop_limit() {
        assert_eq!(brute_force_within(&chain(), 0).unwrap(), Infinite);
        assert_eq!(brute_force_within(&chain(), 1).unwrap(), Finite(10));
        assert_eq!(brute_force_within(&chain(), 2).unwrap(), Finite(10));
        assert_eq!(brute_force_within(&chain(), 3).unwrap(), Finite(3));
    }

    #[test]
    fn size_guard() {
        let g = Graph::new(11, []).unwrap();
        assert!(matches!(
            brute_force_distance(&g),
            Err(Error::SizeLimit { n: 11, limit: 10 })
        ));
        assert!(brute_force_distance(&Graph::new(10, []).unwrap()).is_ok());
    }
}
