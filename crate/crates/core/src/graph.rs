//! Directed graphs and their extended-weight cost matrix.
//!
//! Node indices are 1-based everywhere in the public API, so node `1` is the
//! origin and node `n` is the target of every route query.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::weight::{ExtWeight, Finite, Infinite, MAX_ARC_WEIGHT};

/// A weighted directed arc `from -> to`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub weight: u64,
}

impl Arc {
    pub const fn new(from: usize, to: usize, weight: u64) -> Self {
        Arc { from, to, weight }
    }
}

impl From<(usize, usize, u64)> for Arc {
    fn from((from, to, weight): (usize, usize, u64)) -> Self {
        Arc { from, to, weight }
    }
}

/// Number of ordered node pairs without loops, i.e. the arc count of the
/// complete digraph on `n` nodes.
pub fn max_arcs(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "a graph needs at least 2 nodes, got {n}"
        )));
    }
    n.checked_mul(n - 1)
        .ok_or_else(|| Error::InvalidParameter(format!("node count {n} is too large")))
}

/// A simple directed graph: `n >= 2` nodes, no loops, no parallel arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    arcs: Vec<Arc>,
}

impl Graph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let arcs: Vec<Arc> = arcs.into_iter().collect();
        validate_arcs(n, &arcs)?;
        Ok(Graph { n, arcs })
    }

    /// Build from `(from, to, weight)` triples.
    pub fn from_triples(n: usize, triples: &[(usize, usize, u64)]) -> Result<Self> {
        Graph::new(n, triples.iter().copied().map(Arc::from))
    }

    // Callers guarantee validity (the generator samples distinct pairs).
    pub(crate) fn from_parts_unchecked(n: usize, arcs: Vec<Arc>) -> Self {
        debug_assert!(validate_arcs(n, &arcs).is_ok());
        Graph { n, arcs }
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in their original (generation or input) order.
    #[inline]
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }
}

fn validate_arcs(n: usize, arcs: &[Arc]) -> Result<()> {
    let limit = max_arcs(n)?;
    if arcs.len() > limit {
        return Err(Error::MalformedGraph(format!(
            "{} arcs exceed the {limit} possible on {n} nodes",
            arcs.len()
        )));
    }
    let mut seen = HashSet::with_capacity(arcs.len());
    for arc in arcs {
        check_arc(n, arc)?;
        if !seen.insert((arc.from, arc.to)) {
            return Err(Error::MalformedGraph(format!(
                "duplicate arc ({}, {})",
                arc.from, arc.to
            )));
        }
    }
    Ok(())
}

fn check_arc(n: usize, arc: &Arc) -> Result<()> {
    if arc.from == 0 || arc.from > n || arc.to == 0 || arc.to > n {
        return Err(Error::MalformedGraph(format!(
            "arc ({}, {}) has a node outside 1..={n}",
            arc.from, arc.to
        )));
    }
    if arc.from == arc.to {
        return Err(Error::MalformedGraph(format!(
            "loop arc at node {}",
            arc.from
        )));
    }
    if arc.weight > MAX_ARC_WEIGHT {
        return Err(Error::MalformedGraph(format!(
            "arc ({}, {}) weight {} exceeds {MAX_ARC_WEIGHT}",
            arc.from, arc.to, arc.weight
        )));
    }
    Ok(())
}

/// The dense `n x n` extended-weight table: zero diagonal, arc weight where
/// an arc exists, `Infinite` elsewhere. Stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    n: usize,
    entries: Vec<ExtWeight>,
}

impl CostMatrix {
    /// Builds the matrix straight from an arc list, rejecting loops,
    /// duplicate ordered pairs and out-of-range nodes.
    pub fn from_arcs(n: usize, arcs: &[Arc]) -> Result<Self> {
        max_arcs(n)?;
        let mut entries = vec![Infinite; n * n];
        for i in 0..n {
            entries[i * n + i] = Finite(0);
        }
        for arc in arcs {
            check_arc(n, arc)?;
            let slot = &mut entries[(arc.from - 1) * n + (arc.to - 1)];
            if slot.is_finite() {
                return Err(Error::MalformedGraph(format!(
                    "duplicate arc ({}, {})",
                    arc.from, arc.to
                )));
            }
            *slot = Finite(arc.weight);
        }
        Ok(CostMatrix { n, entries })
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> ExtWeight {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Row `i` (1-based) as a 0-based slice.
    #[inline]
    pub fn row(&self, i: usize) -> &[ExtWeight] {
        let start = (i - 1) * self.n;
        &self.entries[start..start + self.n]
    }

    #[inline]
    pub(crate) fn row0(&self, i: usize) -> &[ExtWeight] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }
}

pub fn build_cost_matrix(g: &Graph) -> Result<CostMatrix> {
    CostMatrix::from_arcs(g.n, &g.arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn max_arcs_examples() {
        assert_eq!(max_arcs(2).unwrap(), 2);
        assert_eq!(max_arcs(90).unwrap(), 8010);
        assert_eq!(max_arcs(10).unwrap(), 90);
        assert!(matches!(max_arcs(1), Err(Error::InvalidParameter(_))));
        assert!(matches!(max_arcs(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn empty_graph_matrix() {
        let a = build_cost_matrix(&Graph::new(3, []).unwrap()).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let want = if i == j { Finite(0) } else { Infinite };
                assert_eq!(a.get(i, j), want);
            }
        }
    }

    #[test]
    fn single_arc_matrix() {
        let a = build_cost_matrix(&Graph::from_triples(2, &[(1, 2, 7)]).unwrap()).unwrap();
        assert_eq!(a.get(1, 2), Finite(7));
        assert_eq!(a.get(2, 1), Infinite);
        assert_eq!(a.get(1, 1), Finite(0));
        assert_eq!(a.get(2, 2), Finite(0));
    }

    #[test]
    fn chain_matrix_has_exactly_the_arcs() {
        let arcs = [(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 10)];
        let a = build_cost_matrix(&Graph::from_triples(4, &arcs).unwrap()).unwrap();
        let mut finite_off_diag = Vec::new();
        for i in 1..=4 {
            for j in 1..=4 {
                if i != j {
                    if let Finite(w) = a.get(i, j) {
                        finite_off_diag.push((i, j, w));
                    }
                }
            }
        }
        finite_off_diag.sort();
        let mut want = arcs.to_vec();
        want.sort();
        assert_eq!(finite_off_diag, want);
    }

    #[test]
    fn malformed_arcs_rejected() {
        let loop_arc = [Arc::new(2, 2, 5)];
        assert!(matches!(
            Graph::new(3, loop_arc),
            Err(Error::MalformedGraph(_))
        ));
        assert!(matches!(
            CostMatrix::from_arcs(3, &loop_arc),
            Err(Error::MalformedGraph(_))
        ));

        let dup = [Arc::new(1, 2, 5), Arc::new(1, 2, 6)];
        assert!(matches!(Graph::new(3, dup), Err(Error::MalformedGraph(_))));
        assert!(matches!(
            CostMatrix::from_arcs(3, &dup),
            Err(Error::MalformedGraph(_))
        ));

        let out_of_range = [Arc::new(1, 4, 1)];
        assert!(Graph::new(3, out_of_range).is_err());
        assert!(Graph::new(3, [Arc::new(0, 2, 1)]).is_err());
        assert!(Graph::new(3, [Arc::new(1, 2, MAX_ARC_WEIGHT + 1)]).is_err());
        assert!(Graph::new(1, []).is_err());
    }

    #[test]
    fn opposite_arcs_are_distinct_pairs() {
        let g = Graph::from_triples(2, &[(1, 2, 3), (2, 1, 4)]).unwrap();
        assert_eq!(g.arc_count(), max_arcs(2).unwrap());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..8).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
                .collect();
            let len = pairs.len();
            (
                Just(n),
                proptest::sample::subsequence(pairs, 0..=len),
                proptest::collection::vec(0u64..=100, len),
            )
                .prop_map(|(n, chosen, ws)| {
                    let arcs = chosen
                        .into_iter()
                        .zip(ws)
                        .map(|((i, j), w)| Arc::new(i, j, w));
                    Graph::new(n, arcs).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn entries_match_arcs(g in arb_graph()) {
            let a = build_cost_matrix(&g).unwrap();
            let n = g.node_count();
            for i in 1..=n {
                prop_assert_eq!(a.get(i, i), Finite(0));
                for j in (1..=n).filter(|&j| j != i) {
                    let arc = g.arcs().iter().find(|arc| arc.from == i && arc.to == j);
                    match arc {
                        Some(arc) => prop_assert_eq!(a.get(i, j), Finite(arc.weight)),
                        None => prop_assert_eq!(a.get(i, j), Infinite),
                    }
                }
            }
        }

        #[test]
        fn arc_order_does_not_matter(g in arb_graph()) {
            let mut reversed = g.arcs().to_vec();
            reversed.reverse();
            let h = Graph::new(g.node_count(), reversed).unwrap();
            prop_assert_eq!(build_cost_matrix(&g).unwrap(), build_cost_matrix(&h).unwrap());
        }
    }
}
