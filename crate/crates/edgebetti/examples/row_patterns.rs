//! Prescribing a window of nonzero entries in a single row of the Betti
//! table: complement a cycle joined to a tree, then suspend with disjoint
//! edges.

use edgebetti::graph::path;
use edgebetti::{betti_table, row_pattern_graph, section6_graph, FieldSpec, Result};

fn main() -> Result<()> {
    let field = FieldSpec::gf2();

    // complement(C5 + P3) + one extra edge: homology in degree 2 appears
    // for induced subgraphs in a predictable window of sizes.
    let g = section6_graph(5, &path(3)?, 1)?;
    let table = betti_table(&g, field)?;
    println!("section graph on {} vertices:", g.n());
    print!("{table}");

    // The same machinery aimed at one entry: ask for row 3 support at
    // column 3 among graphs on 8 vertices.
    let g = row_pattern_graph(3, 3, 8, &path(4)?)?;
    let table = betti_table(&g, field)?;
    println!("\nrow-pattern graph for (r, i, n) = (3, 3, 8):");
    print!("{table}");
    let support: Vec<i64> = table.row(3).iter().map(|&(i, _)| i).collect();
    println!("row 3 support: {support:?}");

    // The construction needs a core cycle of length at least 4 to leave
    // row 3 alive: at column i = 2 the recipe calls for a triangle, the
    // clique complex fills it in, and the row comes out empty.
    let g = row_pattern_graph(3, 2, 6, &path(3)?)?;
    let table = betti_table(&g, field)?;
    println!("\n(r, i, n) = (3, 2, 6) gets a triangle core; row 3 = {:?}", table.row(3));
    assert!(table.row(3).is_empty());
    Ok(())
}
