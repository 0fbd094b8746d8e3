use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::CostMatrix;
use crate::solver::DistanceVector;
use crate::weight::{ext_add, ExtWeight, Finite};

/// A cheapest route from node 1 to node n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Route {
    pub nodes: Vec<usize>,
    pub cost: u64,
}

/// Recovers a route from a converged distance vector by successor chaining.
///
/// From node `i` the route moves to the smallest `j != i` whose arc is tight,
/// i.e. `d[i] = a[i][j] + d[j]`. A zero-weight tight arc is only taken if it
/// brings the walk strictly closer (in tight arcs) to node n, which keeps
/// zero-weight cycles from trapping the walk.
pub fn extract_route(a: &CostMatrix, d: &DistanceVector) -> Result<Route> {
    let n = a.node_count();
    assert_eq!(d.len(), n, "distance vector length must match the matrix");
    let Finite(cost) = d.get(1) else {
        return Err(Error::NoRoute { n });
    };

    let tight = |i: usize, j: usize| -> bool {
        i != j && d.get(i).is_finite() && ext_add(a.get(i, j), d.get(j)) == d.get(i)
    };
    let hops = tight_hops_to_target(n, &tight);

    let mut nodes = vec![1];
    let mut current = 1;
    while current != n {
        let next = (1..=n)
            .find(|&j| {
                tight(current, j)
                    && (a.get(current, j) != ExtWeight::ZERO || hops[j - 1] < hops[current - 1])
            })
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "distance vector is not a fixed point of the matrix at node {current}"
                ))
            })?;
        nodes.push(next);
        current = next;
        if nodes.len() > n {
            return Err(Error::InvalidParameter(
                "distance vector is not a fixed point of the matrix".into(),
            ));
        }
    }
    Ok(Route { nodes, cost })
}

// Fewest tight arcs from each node to node n (usize::MAX when none).
fn tight_hops_to_target(n: usize, tight: &impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut hops = vec![usize::MAX; n];
    hops[n - 1] = 0;
    let mut queue = VecDeque::from([n]);
    while let Some(j) = queue.pop_front() {
        for i in 1..=n {
            if hops[i - 1] == usize::MAX && tight(i, j) {
                hops[i - 1] = hops[j - 1] + 1;
                queue.push_back(i);
            }
        }
    }
    hops
}
