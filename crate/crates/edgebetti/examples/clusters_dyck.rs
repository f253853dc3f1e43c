//! Parabolic clusters and their bijection with Dyck-like lattice paths.
//!
//! A k-cluster c(a_1, ..., a_k) is a disjoint union of cliques with all
//! edges between distinct cliques removed from the complete graph; the
//! parabolic ones (a_1 = 2, a_i <= i) are counted by the Catalan numbers.

use edgebetti::{
    catalan, cluster_to_dyck, dyck_to_cluster, parabolic_clusters, ClusterSpec, FieldSpec, Result,
};

fn main() -> Result<()> {
    for k in 2..=6 {
        let list = parabolic_clusters(k)?;
        println!("k = {k}: {} parabolic clusters (Catalan {})", list.len(), catalan(k as u64 - 1)?);
        if k <= 4 {
            for spec in &list {
                let dyck = cluster_to_dyck(spec)?;
                println!("  {spec}  <->  {dyck}  (offset {})", spec.offset());
            }
        }
    }

    // Round trip through the path encoding.
    for k in 2..=7 {
        for spec in parabolic_clusters(k)? {
            let back = dyck_to_cluster(&cluster_to_dyck(&spec)?)?;
            assert_eq!(spec, back);
        }
    }
    println!("\npath encoding round-trips for every parabolic cluster up to k = 7");

    // The homology of a cluster's independence complex concentrates in the
    // top degree, with dimension the product of (a_i - 1).
    let spec = ClusterSpec::new(&[2, 2, 3])?;
    let g = spec.graph()?;
    let profile = edgebetti::independence_homology(&g, FieldSpec::gf2());
    println!("\nInd({spec}) over GF(2): {profile}");
    Ok(())
}
