//! Print every intermediate cost vector of the Jacobi (classic) and
//! bottom-up Gauss-Seidel (accelerated) sweeps on a random graph.
//!
//! ```bash
//! cargo run -p bkroute --example sweep_orders -- 12 30 5
//! ```
//! Arguments: node count, arc count, seed (defaults 8 20 1).

use bkroute::generator::{draw_graph, RngStream};
use bkroute::solver::solve_traced;
use bkroute::{build_cost_matrix, Method};

fn main() -> Result<(), bkroute::Error> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(8) as usize;
    let m = args.get(1).copied().unwrap_or(20) as usize;
    let seed = args.get(2).copied().unwrap_or(1);

    let g = draw_graph(n, m, 100, &mut RngStream::new(seed));
    println!("graph: n={} m={}", g.node_count(), g.arc_count());
    for arc in g.arcs() {
        println!("  {} -> {} ({})", arc.from, arc.to, arc.weight);
    }

    let a = build_cost_matrix(&g)?;
    for method in Method::ALL {
        let (result, trace) = solve_traced(&a, method)?;
        println!("\n{method}: {} sweeps", result.sweeps);
        for (k, v) in trace.iter().enumerate() {
            println!("  v^{k} = {v}");
        }
    }
    Ok(())
}
