//! Generate an interval-type graph set, store it as a BKSET file and read it
//! back.
//!
//! ```bash
//! cargo run -p bkroute --example generate_and_store
//! ```

use bkroute::generator::{generate_set_with_summary, GenSpec};
use bkroute::graphset::{read_set, write_set};

fn main() -> Result<(), bkroute::Error> {
    // n in 10..=30, m in 701..=800: small graphs get clamped to n(n-1) arcs
    let spec = GenSpec::interval((10, 30), (701, 800), 100, 7);
    let (graphs, summary) = generate_set_with_summary(&spec)?;
    println!(
        "generated {} graphs, {} clamped",
        summary.graphs, summary.clamped
    );

    let path = std::env::temp_dir().join("bkroute-example.bkset");
    write_set(&graphs, &spec, &path)?;
    let (echo, back) = read_set(&path)?;
    assert_eq!(back, graphs);
    println!(
        "round-tripped {} graphs through {} (seed {})",
        back.len(),
        path.display(),
        echo.seed
    );

    let text = std::fs::read_to_string(&path).map_err(|e| bkroute::Error::Io {
        path: path.clone(),
        source: e,
    })?;
    for line in text.lines().take(6) {
        println!("  {line}");
    }
    Ok(())
}
