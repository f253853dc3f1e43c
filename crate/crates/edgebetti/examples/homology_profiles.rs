//! Reduced homology of independence complexes over small prime fields.

use edgebetti::graph::{cycle, disjoint_union, matching};
use edgebetti::{independence_complex, independence_homology, reduced_homology, FieldSpec, Result};

fn main() -> Result<()> {
    // Ind(C_n) is homotopy equivalent to a sphere or a wedge of two
    // spheres depending on n mod 3.
    for n in 4..=9 {
        let profile = independence_homology(&cycle(n)?, FieldSpec::gf2());
        println!("Ind(C{n}): {profile}");
    }

    // A fat matching kM2 gives a sphere S^(k-1) after suspension k times;
    // adding one disjoint edge suspends any complex.
    println!();
    for k in 1..=5 {
        let profile = independence_homology(&matching(k)?, FieldSpec::gf2());
        println!("Ind({k} disjoint edges): {profile}");
    }

    let g = cycle(5)?;
    let suspended = disjoint_union(&[g.clone(), matching(1)?])?;
    println!(
        "\nInd(C5): {}  after one suspension: {}",
        independence_homology(&g, FieldSpec::gf2()),
        independence_homology(&suspended, FieldSpec::gf2())
    );

    // Characteristic only starts to matter for bigger graphs: a flag
    // triangulation of the projective plane needs eleven vertices, so
    // everything tiny agrees across fields.
    let field2 = FieldSpec::new(2)?;
    let field3 = FieldSpec::new(3)?;
    for n in 1..=6 {
        for g in edgebetti::enumerate_unlabeled(n)?.iter() {
            let c = independence_complex(g);
            let h2: Vec<_> = reduced_homology(&c, field2).entries().collect();
            let h3: Vec<_> = reduced_homology(&c, field3).entries().collect();
            assert_eq!(h2, h3, "{g:?}");
        }
    }
    println!("\nGF(2) and GF(3) agree on all independence complexes with n <= 6");
    Ok(())
}
