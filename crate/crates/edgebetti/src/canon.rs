//! Canonical forms, isomorphism tests, automorphism counts.
//!
//! Two implementations, picked by order:
//!
//! * `n <= 8`: exact minimum adjacency matrix over all relabelings, found by
//!   a backtracking search that prunes on the partial bit prefix. Small
//!   enough to cross-check against a full permutation sweep in tests.
//! * `n > 8`: partition-refinement backtracking (individualize a vertex in
//!   the first non-singleton cell, re-refine, recurse), taking the minimum
//!   key over all discrete leaves. Refinement is isomorphism-equivariant, so
//!   the leaf minimum is a canonical form.
//!
//! The two produce different (both valid) representatives, so keys must
//! never be compared across the size-8 boundary. Every comparison site in
//! this crate only ever compares graphs of equal order, which is also why
//! `CanonicalForm` stores `n`.

use crate::graph::{Graph, VertexSet};

/// Canonical key: order plus the lower-triangle adjacency bits of the
/// canonical relabeling.
///
/// Bit `i` of the sequence (running over (u,v) pairs, v = 1..n, u = 0..v)
/// is stored at position `63 - i % 64` of word `i / 64`, so comparing the
/// word vectors lexicographically compares the bit sequences
/// lexicographically. Both search strategies minimize under that one order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rebuild the canonical representative graph from the key.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut idx = 0usize;
        for v in 1..self.n {
            for u in 0..v {
                if self.bits[idx / 64] >> (63 - idx % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        Graph::from_edges(self.n, &edges).expect("key encodes a valid graph")
    }
}

fn key_len_words(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(64).max(1)
}

/// Lower-triangle bits of `g` relabelled by `order` (position -> original
/// vertex), bit index running over (u,v), v = 1..n, u = 0..v, packed
/// MSB-first per the `CanonicalForm` convention.
fn key_under_order(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut bits = vec![0u64; key_len_words(n)];
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(order[u], order[v]) {
                bits[idx / 64] |= 1 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    bits
}

// ---------------------------------------------------------------------------
// Small graphs: exact minimum over all relabelings
// ---------------------------------------------------------------------------

struct BruteState<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    used: u64,
    /// Bit sequence fixed so far, first bit most significant.
    prefix: u64,
    /// Best complete bit sequence, same orientation, `u64::MAX` before the
    /// first leaf.
    best: u64,
    total_bits: usize,
}

impl BruteState<'_> {
    fn place(&mut self, pos: usize, bits_so_far: usize) {
        let n = self.g.n();
        if pos == n {
            // bits_so_far == total_bits here.
            if self.prefix < self.best {
                self.best = self.prefix;
            }
            return;
        }
        for v in 0..n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            // New bits: adjacency of v against order[0..pos], u ascending,
            // first comparison bit most significant within the chunk.
            let mut chunk = 0u64;
            for (u, &w) in self.order[..pos].iter().enumerate() {
                if self.g.has_edge(w, v) {
                    chunk |= 1 << (pos - 1 - u);
                }
            }
            let new_bits = bits_so_far + pos;
            let prefix = (self.prefix << pos) | chunk;
            // Lexicographic prune: compare against best's leading bits.
            if prefix > self.best >> (self.total_bits - new_bits) {
                continue;
            }
            self.order[pos] = v;
            self.used |= 1 << v;
            let saved = self.prefix;
            self.prefix = prefix;
            self.place(pos + 1, new_bits);
            self.prefix = saved;
            self.used &= !(1u64 << v);
        }
    }
}

fn canon_brute(g: &Graph) -> CanonicalForm {
    let n = g.n();
    debug_assert!(n <= 8, "brute canonical form is for n <= 8 only");
    if n <= 1 {
        return CanonicalForm { n, bits: vec![0] };
    }
    let total_bits = n * (n - 1) / 2;
    let mut st = BruteState {
        g,
        order: vec![0; n],
        used: 0,
        prefix: 0,
        best: u64::MAX,
        total_bits,
    };
    st.place(0, 0);
    // Repack MSB-first into the word layout shared with key_under_order.
    CanonicalForm {
        n,
        bits: vec![st.best << (64 - total_bits)],
    }
}

// ---------------------------------------------------------------------------
// Larger graphs: refinement backtracking
// ---------------------------------------------------------------------------

/// Refine an ordered partition to equitability. Cells are vertex masks in
/// order; each vertex is re-keyed by (its cell, neighbour counts against
/// every cell) until nothing splits. Fragments of a split cell are ordered
/// by ascending count vector, which depends only on the partition structure,
/// so refinement commutes with isomorphism.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        let mut next: Vec<u64> = Vec::with_capacity(cells.len());
        for &cell in cells.iter() {
            if cell.count_ones() <= 1 {
                next.push(cell);
                continue;
            }
            // Signature per vertex: neighbour count against every current cell.
            let mut groups: Vec<(Vec<u32>, u64)> = Vec::new();
            let mut rest = cell;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let sig: Vec<u32> = cells.iter().map(|&c| (g.adj(v) & c).count_ones()).collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, mask)) => *mask |= 1 << v,
                    None => groups.push((sig, 1 << v)),
                }
            }
            if groups.len() > 1 {
                changed = true;
                groups.sort_by(|a, b| a.0.cmp(&b.0));
            }
            next.extend(groups.into_iter().map(|(_, m)| m));
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn refine_search(g: &Graph, cells: Vec<u64>, best: &mut Option<Vec<u64>>) {
    match cells.iter().position(|c| c.count_ones() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let key = key_under_order(g, &order);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
        }
        Some(pos) => {
            let cell = cells[pos];
            let mut rest = cell;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut child: Vec<u64> = Vec::with_capacity(cells.len() + 1);
                child.extend_from_slice(&cells[..pos]);
                child.push(1u64 << v);
                child.push(cell & !(1u64 << v));
                child.extend_from_slice(&cells[pos + 1..]);
                refine(g, &mut child);
                refine_search(g, child, best);
            }
        }
    }
}

fn canon_refine(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n <= 1 {
        return CanonicalForm { n, bits: vec![0] };
    }
    let mut cells = vec![VertexSet::full(n).bits()];
    refine(g, &mut cells);
    let mut best = None;
    refine_search(g, cells, &mut best);
    CanonicalForm {
        n,
        bits: best.expect("at least one leaf"),
    }
}

/// Canonical form of `g`. Equal keys iff isomorphic (for graphs of equal
/// order computed through this function).
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    if g.n() <= 8 {
        canon_brute(g)
    } else {
        canon_refine(g)
    }
}

/// Refinement-based canonical form at every order. Used by tests to
/// cross-check the brute-force path; prefer `canonical_form`.
pub fn canonical_form_refinement(g: &Graph) -> CanonicalForm {
    canon_refine(g)
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Number of automorphisms, by backtracking over label-preserving
/// assignments. Exponential in the worst case; callers stay at n <= 8.
pub fn automorphism_count(g: &Graph) -> u64 {
    let n = g.n();
    if n <= 1 {
        return 1;
    }
    fn go(g: &Graph, order: &mut Vec<usize>, used: u64, count: &mut u64) {
        let pos = order.len();
        let n = g.n();
        if pos == n {
            *count += 1;
            return;
        }
        'candidates: for v in 0..n {
            if used >> v & 1 == 1 || g.degree(v) != g.degree(pos) {
                continue;
            }
            for (u, &w) in order.iter().enumerate() {
                if g.has_edge(u, pos) != g.has_edge(w, v) {
                    continue 'candidates;
                }
            }
            order.push(v);
            go(g, order, used | 1 << v, count);
            order.pop();
        }
    }
    let mut count = 0;
    go(g, &mut Vec::with_capacity(n), 0, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, matching, path, Graph};

    /// Independent oracle: minimum key over every permutation, generated by
    /// Heap's algorithm. Deliberately shares no code with the search above.
    fn canon_all_perms(g: &Graph) -> Vec<u64> {
        let n = g.n();
        if n <= 1 {
            return vec![0];
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u64>> = None;
        let mut consider = |p: &[usize]| {
            let key = key_under_order(g, p);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        };
        consider(&perm);
        let mut c = vec![0usize; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                consider(&perm);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best.unwrap()
    }

    #[test]
    fn brute_matches_full_permutation_sweep_small() {
        for n in 0..=6usize {
            for g in crate::enumerate::enumerate_unlabeled(n.max(1)).unwrap().iter() {
                assert_eq!(canonical_form(g).bits, canon_all_perms(g), "n={n} g={g:?}");
            }
        }
    }

    #[test]
    fn brute_matches_full_permutation_sweep_n7() {
        for g in crate::enumerate::enumerate_unlabeled(7).unwrap().iter() {
            assert_eq!(canonical_form(g).bits, canon_all_perms(g));
        }
    }

    #[test]
    fn relabeling_does_not_change_the_key() {
        // Random graphs under random relabelings, including n = 8.
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=11usize {
            for g in crate::enumerate::sample_graphs(n, 25, 1000 + n as u64).unwrap() {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
                let h = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(canonical_form(&g), canonical_form(&h));
                assert_eq!(
                    canonical_form_refinement(&g),
                    canonical_form_refinement(&h)
                );
            }
        }
    }

    #[test]
    fn refinement_separates_non_isomorphic_pairs() {
        // All classes at n = 7 must give pairwise distinct refinement keys.
        let graphs = crate::enumerate::enumerate_unlabeled(7).unwrap();
        let keys: std::collections::HashSet<_> = graphs
            .iter()
            .map(canonical_form_refinement)
            .collect();
        assert_eq!(keys.len(), graphs.len());
    }

    #[test]
    fn sampled_oracle_check_at_n8() {
        for g in crate::enumerate::sample_graphs(8, 40, 99).unwrap() {
            assert_eq!(canonical_form(&g).bits, canon_all_perms(&g));
        }
    }

    #[test]
    fn to_graph_round_trips() {
        for g in [path(5).unwrap(), cycle(6).unwrap(), crate::graph::heawood()] {
            let key = canonical_form(&g);
            let rep = key.to_graph();
            assert_eq!(canonical_form(&rep), key);
            assert_eq!(rep.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn isomorphic_spot_checks() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(isomorphic(&a, &b));
        assert!(!isomorphic(&a, &matching(2).unwrap()));
        assert!(!isomorphic(&path(4).unwrap(), &path(5).unwrap()));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&complete(4).unwrap()), 24);
        assert_eq!(automorphism_count(&cycle(5).unwrap()), 10);
        assert_eq!(automorphism_count(&path(4).unwrap()), 2);
        assert_eq!(automorphism_count(&matching(2).unwrap()), 8);
        assert_eq!(automorphism_count(&Graph::empty(5).unwrap()), 120);
    }
}
