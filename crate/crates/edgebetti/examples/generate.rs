//! Isomorph-free enumeration of graphs and trees.

use edgebetti::graph6::encode;
use edgebetti::{automorphism_count, enumerate_trees, enumerate_unlabeled, Result};

fn main() -> Result<()> {
    for n in 1..=7 {
        let classes = enumerate_unlabeled(n)?;
        println!("graphs on {n} vertices: {}", classes.len());
    }

    println!();
    for n in 1..=8 {
        let trees = enumerate_trees(n)?;
        println!("trees on {n} vertices: {}", trees.len());
    }

    // Labeled counts come back through the orbit-stabilizer theorem.
    let n = 5;
    let mut labeled: u64 = 0;
    for g in enumerate_unlabeled(n)?.iter() {
        let aut = automorphism_count(g);
        labeled += factorial(n as u64) / aut;
    }
    println!("\nsum of n!/|Aut| over classes on {n} vertices: {labeled} = 2^C(5,2)");
    assert_eq!(labeled, 1 << 10);

    println!("\nthe six trees on six vertices:");
    for t in enumerate_trees(6)? {
        println!("  {}  max degree {}", encode(&t), t.max_degree());
    }
    Ok(())
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
