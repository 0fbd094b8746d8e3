//! Solve the four-node worked example with both sweep orders and recover
//! the cheapest route.
//!
//! ```bash
//! cargo run -p bkroute --example quickstart
//! ```

use bkroute::{bk_accelerated, bk_classic, build_cost_matrix, extract_route, Graph};

fn main() -> Result<(), bkroute::Error> {
    // 1 -> 2 -> 3 -> 4 costs 3, the direct arc 1 -> 4 costs 10
    let g = Graph::from_triples(4, &[(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 10)])?;
    let a = build_cost_matrix(&g)?;

    let classic = bk_classic(&a)?;
    let accel = bk_accelerated(&a)?;
    println!(
        "classic:     distances {} in {} sweeps ({} relaxations)",
        classic.distances, classic.sweeps, classic.relaxations
    );
    println!(
        "accelerated: distances {} in {} sweeps ({} relaxations)",
        accel.distances, accel.sweeps, accel.relaxations
    );

    let route = extract_route(&a, &accel.distances)?;
    println!("route {:?} with cost {}", route.nodes, route.cost);
    Ok(())
}
