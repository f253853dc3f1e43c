//! Residue families and the desk test for criticality.
//!
//! F(H, s, t) collects the graphs left over when an (s,t)-cover of H is
//! deleted, one member per isomorphism class.  H is critical when, for
//! every split of chi_c(H) - 2, the family either collapses (some member
//! embeds in everything large) or diverges; the desk test checks a window
//! of host sizes exhaustively.

use edgebetti::graph::{cycle, path, Graph};
use edgebetti::graph6::encode;
use edgebetti::{coloring_number, is_critical_desk, residue_family, Result};

fn show(name: &str, h: &Graph, n_max: usize) -> Result<()> {
    let col = coloring_number(h)?;
    let report = is_critical_desk(h, n_max)?;
    println!("{name}: chi_c = {}, verdict: {}", col.chi_c, report.verdict);
    for pair in &report.pairs {
        let family = pair
            .family
            .iter()
            .map(|g| format!("{} ({}v)", encode(g), g.n()))
            .collect::<Vec<_>>()
            .join(", ");
        let kind = if pair.collapsing {
            "collapsing"
        } else if pair.divergent {
            "divergent"
        } else {
            "undecided"
        };
        println!("  F(H, {}, {}) = [{family}]  {kind}", pair.s, pair.t);
    }
    Ok(())
}

fn main() -> Result<()> {
    // The two smallest interesting cycles split: C7 passes, C5 does not.
    show("C5", &cycle(5)?, 8)?;
    show("C7", &cycle(7)?, 8)?;

    // A tadpole: triangle with a pendant path of length two.
    let tadpole = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])?;
    show("tadpole", &tadpole, 8)?;

    // Residue families themselves, for the record.
    let f = residue_family(&path(5)?, 1, 0)?;
    println!(
        "\nF(P5, 1, 0) = [{}]",
        f.iter().map(encode).collect::<Vec<_>>().join(", ")
    );
    Ok(())
}
