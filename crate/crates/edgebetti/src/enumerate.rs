//! Exhaustive and random generation of small graphs.
//!
//! Unlabeled graphs are built level by level: every n-vertex graph arises
//! from an (n-1)-vertex graph by attaching a new vertex to some neighbor
//! set, so canonicalizing all such extensions and deduplicating yields each
//! isomorphism class exactly once. Levels are cached; the order within a
//! level is by canonical form, so callers see a stable, deterministic
//! sequence no matter the thread count.

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const MAX_ENUM_VERTICES: usize = 9;
pub const MAX_TREE_VERTICES: usize = 12;

static LEVELS: [OnceLock<Arc<Vec<Graph>>>; MAX_ENUM_VERTICES + 1] =
    [const { OnceLock::new() }; MAX_ENUM_VERTICES + 1];

/// All unlabeled graphs on `n` vertices, one canonical representative per
/// isomorphism class, sorted by canonical form. Cached after the first call.
pub fn enumerate_unlabeled(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n > MAX_ENUM_VERTICES {
        return Err(Error::Capacity(format!(
            "unlabeled enumeration is limited to {MAX_ENUM_VERTICES} vertices, asked for {n}"
        )));
    }
    Ok(Arc::clone(LEVELS[n].get_or_init(|| Arc::new(build_level(n)))))
}

fn build_level(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0).unwrap()];
    }
    let parents = enumerate_unlabeled(n - 1).unwrap();
    let mut forms: Vec<CanonicalForm> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let parent = parent.clone();
            (0u64..1 << (n - 1)).map(move |nbrs| {
                let mut edges = parent.edges();
                let mut rest = nbrs;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    edges.push((v, n - 1));
                }
                canonical_form(&Graph::from_edges(n, &edges).unwrap())
            })
        })
        .collect();
    forms.par_sort_unstable();
    forms.dedup();
    forms.iter().map(CanonicalForm::to_graph).collect()
}

/// All unlabeled trees on `n >= 1` vertices, sorted by canonical form.
/// Grown by leaf attachment: every tree on n vertices is a tree on n-1
/// vertices plus a leaf.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidInput("trees need at least one vertex".into()));
    }
    if n > MAX_TREE_VERTICES {
        return Err(Error::Capacity(format!(
            "tree enumeration is limited to {MAX_TREE_VERTICES} vertices, asked for {n}"
        )));
    }
    let mut level = vec![Graph::empty(1).unwrap()];
    for k in 2..=n {
        let mut forms: Vec<CanonicalForm> = level
            .iter()
            .flat_map(|tree| {
                (0..k - 1).map(|v| {
                    let mut edges = tree.edges();
                    edges.push((v, k - 1));
                    canonical_form(&Graph::from_edges(k, &edges).unwrap())
                })
            })
            .collect();
        forms.sort_unstable();
        forms.dedup();
        level = forms.iter().map(CanonicalForm::to_graph).collect();
    }
    Ok(level)
}

/// `count` independent draws from G(n, 1/2), deterministic in `seed`.
pub fn sample_graphs(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!("sampling on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(random_graph(n, &mut rng));
    }
    Ok(out)
}

fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random::<bool>() {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn unlabeled_counts_match_the_classical_sequence() {
        let want = [1usize, 1, 2, 4, 11, 34, 156, 1044, 12346];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(enumerate_unlabeled(n).unwrap().len(), w, "n = {n}");
        }
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let graphs = enumerate_unlabeled(6).unwrap();
        let mut seen = HashSet::new();
        for g in graphs.iter() {
            let c = canonical_form(g);
            assert_eq!(&c.to_graph().edges(), &g.edges(), "stored form is the representative");
            assert!(seen.insert(c), "duplicate class for {g:?}");
        }
    }

    #[test]
    fn enumeration_is_closed_under_complement() {
        let graphs = enumerate_unlabeled(6).unwrap();
        let forms: HashSet<CanonicalForm> =
            graphs.iter().map(canonical_form).collect();
        for g in graphs.iter() {
            assert!(forms.contains(&canonical_form(&g.complement())));
        }
    }

    #[test]
    fn rejects_past_capacity() {
        assert!(enumerate_unlabeled(MAX_ENUM_VERTICES + 1).is_err());
        assert!(enumerate_trees(MAX_TREE_VERTICES + 1).is_err());
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn tree_counts_match_the_classical_sequence() {
        let want = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &w) in want.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_trees(n).unwrap().len(), w, "n = {n}");
        }
    }

    #[test]
    fn trees_are_trees() {
        for n in 1..=8 {
            for t in enumerate_trees(n).unwrap() {
                assert!(t.is_connected(), "{t:?}");
                assert_eq!(t.edge_count(), n - 1, "{t:?}");
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_in_the_seed() {
        let a = sample_graphs(9, 5, 42).unwrap();
        let b = sample_graphs(9, 5, 42).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.edges(), y.edges());
        }
        let c = sample_graphs(9, 5, 43).unwrap();
        assert!(a.iter().zip(&c).any(|(x, y)| x.edges() != y.edges()));
    }

    #[test]
    fn sampling_hits_roughly_half_the_pairs() {
        let total: usize = sample_graphs(10, 200, 1).unwrap().iter().map(Graph::edge_count).sum();
        let expect = 200 * 45 / 2;
        assert!((total as i64 - expect as i64).abs() < 600, "total = {total}");
    }
}
