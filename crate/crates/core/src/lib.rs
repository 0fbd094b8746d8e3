//! Shortest-route solvers built on the Bellman-Kalaba min-plus iteration.
//!
//! The crate computes the cheapest route from node `1` to node `n` of a
//! weighted digraph by iterating `v <- A (x) v` over the min-plus semiring,
//! in two sweep orders:
//!
//! * [`bk_classic`]: Jacobi order, each sweep reads only the previous vector;
//! * [`bk_accelerated`]: rows `n - 1` down to `1`, updated in place, so fresh
//!   values are used within the same sweep.
//!
//! Around the solvers sit a seeded graph-set generator ([`generator`]), the
//! BKSET text format ([`graphset`]), independent oracles ([`oracle`]) and a
//! benchmark harness that times both solvers and emits comparison tables
//! ([`bench`]).
//!
//! ```
//! use bkroute::{bk_accelerated, bk_classic, build_cost_matrix, extract_route, Graph};
//!
//! let g = Graph::from_triples(4, &[(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 10)])?;
//! let a = build_cost_matrix(&g)?;
//! let classic = bk_classic(&a)?;
//! let fast = bk_accelerated(&a)?;
//! assert_eq!(classic.distances, fast.distances);
//! assert!(fast.sweeps <= classic.sweeps);
//! assert_eq!(extract_route(&a, &fast.distances)?.nodes, vec![1, 2, 3, 4]);
//! # Ok::<(), bkroute::Error>(())
//! ```

pub mod bench;
pub mod cli;
mod error;
pub mod generator;
pub mod graph;
pub mod graphset;
pub mod oracle;
mod route;
pub mod solver;
mod weight;

pub use error::{Error, Result};
pub use generator::{generate_set, GenSpec};
pub use graph::{build_cost_matrix, max_arcs, Arc, CostMatrix, Graph};
pub use oracle::{brute_force_distance, oracle_distances};
pub use route::{extract_route, Route};
pub use solver::{bk_accelerated, bk_classic, solve, DistanceVector, Method, SolveResult};
pub use weight::{ext_add, ExtWeight, MAX_ARC_WEIGHT};
