//! The meta-graph on isomorphism classes: two classes are adjacent when
//! one is the other plus a single edge.  Restricted to (s,t)-templates it
//! stays connected for every split we can check.

use edgebetti::{metagraph, metagraph_connectivity, Result};

fn main() -> Result<()> {
    for n in 2..=6 {
        let (classes, edges) = metagraph(n)?;
        println!("n = {n}: {} classes, {} single-edge moves", classes.len(), edges.len());
    }

    println!();
    for n in 4..=6 {
        for (s, t) in [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1)] {
            let report = metagraph_connectivity(n, s, t)?;
            println!(
                "n = {n}, ({s},{t})-templates: {} of {} classes, {} edges, {} components",
                report.template_count,
                report.class_count,
                report.restricted_edge_count,
                report.component_count
            );
        }
    }
    Ok(())
}
