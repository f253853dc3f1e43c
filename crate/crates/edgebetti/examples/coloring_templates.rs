//! Covers by cliques and independent sets, the coloring number chi_c, and
//! (s,t)-templates.
//!
//! An (s,t)-cover partitions the vertices into s cliques and t independent
//! sets, and a graph admitting one is an (s,t)-template.  chi_c is the
//! least k such that every split k = s + t works; the witnessing pairs are
//! the splits that still fail one level below.

use edgebetti::graph::{complete, cycle, path, Graph};
use edgebetti::{coloring_number, cover, is_template, verify_certificate, Result};

fn main() -> Result<()> {
    let gallery: Vec<(&str, Graph)> = vec![
        ("C5", cycle(5)?),
        ("C7", cycle(7)?),
        ("P4", path(4)?),
        ("K5", complete(5)?),
        ("complement of C5", cycle(5)?.complement()),
    ];

    for (name, g) in &gallery {
        let col = coloring_number(g)?;
        let pairs = col
            .witnessing
            .iter()
            .map(|(s, t)| format!("({s},{t})"))
            .collect::<Vec<_>>()
            .join(" ");
        println!("{name}: chi_c = {}, witnessing pairs: {pairs}", col.chi_c);
    }

    // Certificates are checkable objects, not just yes/no answers.
    let g = cycle(7)?;
    println!();
    for (s, t) in [(3, 0), (2, 1), (1, 2), (0, 3)] {
        match cover(&g, s, t)? {
            Some(cert) => {
                assert!(verify_certificate(&g, &cert));
                println!("C7 has a ({s},{t})-cover: {cert}");
            }
            None => println!("C7 has no ({s},{t})-cover"),
        }
    }

    // Three cliques cannot reach all seven vertices of C7, and the (2,1)
    // split fails too: those two gaps one level below chi_c = 4 are exactly
    // the witnessing pairs printed above.
    assert!(!is_template(&g, 3, 0)?);
    assert!(!is_template(&g, 2, 1)?);
    assert!(is_template(&g, 1, 2)?);
    println!("\nC7 template checks agree with the witnessing pairs");
    Ok(())
}
