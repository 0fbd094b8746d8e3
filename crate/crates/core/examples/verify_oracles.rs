//! Cross-check both solvers against the arc-list oracle and, for small
//! graphs, against simple-path enumeration.
//!
//! ```bash
//! cargo run -p bkroute --example verify_oracles
//! ```

use bkroute::bench::verify_equivalence;
use bkroute::generator::{generate_set, GenSpec};
use bkroute::{brute_force_distance, Graph};

fn main() -> Result<(), bkroute::Error> {
    let mut graphs = vec![Graph::from_triples(
        4,
        &[(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 10)],
    )?];
    graphs.extend(generate_set(&GenSpec::interval((2, 8), (1, 56), 500, 3))?);
    graphs.extend(generate_set(&GenSpec::interval(
        (10, 90),
        (1, 8010),
        200,
        4,
    ))?);

    println!(
        "brute force on the worked example: {}",
        brute_force_distance(&graphs[0])?
    );
    let summary = verify_equivalence(&graphs);
    print!("{summary}");
    if !summary.is_ok() {
        std::process::exit(1);
    }
    Ok(())
}
