//! Simplicial complexes on small vertex sets, faces as bitmasks.
//!
//! A complex stores its faces grouped by size: `levels[k]` holds the faces
//! with exactly `k` vertices (dimension `k - 1`), sorted ascending as masks.
//! The distinction between the void complex (no faces at all, `levels`
//! empty) and the empty complex `{∅}` (one face of size zero) matters for
//! reduced homology, so both are representable.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    levels: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    /// The void complex (no faces, not even the empty one).
    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, levels: Vec::new() }
    }

    /// Downward closure of the given faces. An empty face list yields the
    /// void complex; any nonempty list pulls in the empty face.
    pub fn closure(n: usize, faces: &[u64]) -> Result<SimplicialComplex> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!("complex on {n} vertices")));
        }
        let full = VertexSet::full(n).bits();
        let mut seen: Vec<std::collections::HashSet<u64>> = Vec::new();
        let mut stack: Vec<u64> = Vec::new();
        for &f in faces {
            if f & !full != 0 {
                return Err(Error::InvalidInput(format!("face {f:#b} out of range for n={n}")));
            }
            stack.push(f);
        }
        while let Some(f) = stack.pop() {
            let k = f.count_ones() as usize;
            while seen.len() <= k {
                seen.push(std::collections::HashSet::new());
            }
            if !seen[k].insert(f) {
                continue;
            }
            let mut rest = f;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                stack.push(f & !(1u64 << v));
            }
        }
        let mut levels: Vec<Vec<u64>> = seen
            .into_iter()
            .map(|s| {
                let mut v: Vec<u64> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        while levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        Ok(SimplicialComplex { n, levels })
    }

    /// Build from explicit levels. Internal: callers guarantee each level is
    /// sorted and the family is downward closed wherever homology will look.
    pub(crate) fn from_levels(n: usize, levels: Vec<Vec<u64>>) -> SimplicialComplex {
        SimplicialComplex { n, levels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Faces with exactly `k` vertices.
    pub fn faces_of_size(&self, k: usize) -> &[u64] {
        self.levels.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of levels stored (largest face size + 1); 0 for the void complex.
    pub fn size_levels(&self) -> usize {
        self.levels.len()
    }

    /// Dimension of the complex; `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        if self.levels.is_empty() {
            None
        } else {
            Some(self.levels.len() as i64 - 2)
        }
    }

    /// Face counts by size, starting with the empty face: the complex of a
    /// single edge has f-vector `[1, 2, 1]`.
    pub fn f_vector(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.len() as u64).collect()
    }

    pub fn contains_face(&self, f: u64) -> bool {
        let k = f.count_ones() as usize;
        self.levels
            .get(k)
            .is_some_and(|l| l.binary_search(&f).is_ok())
    }

    /// True when every size-`k` face has all its subfaces present, for `k`
    /// in `sizes`. Size 0 is trivially closed.
    pub fn is_closed_at_sizes(&self, sizes: std::ops::RangeInclusive<usize>) -> bool {
        for k in sizes {
            if k == 0 {
                continue;
            }
            for &f in self.faces_of_size(k) {
                let mut rest = f;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if !self.contains_face(f & !(1u64 << v)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_closed(&self) -> bool {
        self.is_closed_at_sizes(0..=self.levels.len().saturating_sub(1))
    }
}

/// Independent sets of `g[mask]` (in host vertex labels) grouped by size,
/// every set of size `<= max_size`. Each level comes out sorted.
///
/// One shortcut applies throughout the crate: if some vertex of `mask` is
/// isolated inside `mask`, the independence complex is a cone over it and
/// all reduced homology vanishes. Callers that only care about homology
/// check `has_isolated_vertex_in` first and skip the enumeration.
pub(crate) fn independent_set_levels(g: &Graph, mask: u64, max_size: usize) -> Vec<Vec<u64>> {
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    if max_size == 0 {
        return levels;
    }
    // (face, candidates above its max vertex that stay independent)
    let mut frontier: Vec<(u64, u64)> = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let above = if v == 63 { 0 } else { !0u64 << (v + 1) };
        frontier.push((1u64 << v, mask & above & !g.adj(v)));
    }
    levels.push(frontier.iter().map(|&(f, _)| f).collect());
    for _ in 2..=max_size {
        let mut next: Vec<(u64, u64)> = Vec::new();
        for &(face, cand) in &frontier {
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next.push((face | 1 << v, cand & rest & !g.adj(v)));
            }
        }
        if next.is_empty() {
            break;
        }
        let mut level: Vec<u64> = next.iter().map(|&(f, _)| f).collect();
        level.sort_unstable();
        levels.push(level);
        frontier = next;
    }
    levels
}

pub(crate) fn has_isolated_vertex_in(g: &Graph, mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.adj(v) & mask == 0 {
            return true;
        }
    }
    false
}

/// The full independence complex of `g`: faces are the independent vertex
/// sets, so edges of `g` are exactly the missing size-2 faces.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let mask = g.vertex_set().bits();
    let levels = independent_set_levels(g, mask, g.n());
    SimplicialComplex::from_levels(g.n(), levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cluster, complete, matching, Graph};

    #[test]
    fn void_and_empty_are_distinct() {
        let void = SimplicialComplex::void(0);
        assert_eq!(void.dim(), None);
        assert_eq!(void.f_vector(), Vec::<u64>::new());
        let empty = SimplicialComplex::closure(0, &[0]).unwrap();
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(empty.f_vector(), vec![1]);
    }

    #[test]
    fn closure_fills_in_subfaces() {
        let c = SimplicialComplex::closure(3, &[0b111]).unwrap();
        assert_eq!(c.f_vector(), vec![1, 3, 3, 1]);
        assert!(c.is_closed());
        assert!(c.contains_face(0b101));
        assert!(!c.contains_face(0b1000));
    }

    #[test]
    fn closure_rejects_out_of_range_faces() {
        assert!(SimplicialComplex::closure(2, &[0b100]).is_err());
    }

    #[test]
    fn independence_complex_of_k4_is_points() {
        let c = independence_complex(&complete(4).unwrap());
        assert_eq!(c.f_vector(), vec![1, 4]);
        assert_eq!(c.dim(), Some(0));
    }

    #[test]
    fn independence_complex_of_two_edges_is_a_four_cycle() {
        let c = independence_complex(&matching(2).unwrap());
        assert_eq!(c.f_vector(), vec![1, 4, 4]);
        assert!(c.is_closed());
    }

    #[test]
    fn independence_complex_of_heawood_complement() {
        let g = crate::graph::heawood().complement();
        let c = independence_complex(&g);
        assert_eq!(c.f_vector(), vec![1, 14, 21]);
    }

    #[test]
    fn empty_graph_gives_full_simplex() {
        let c = independence_complex(&Graph::empty(4).unwrap());
        assert_eq!(c.f_vector(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn levels_are_sorted_and_closed() {
        let g = cluster(&[2, 3]).unwrap();
        let c = independence_complex(&g);
        for k in 0..c.size_levels() {
            let faces = c.faces_of_size(k);
            assert!(faces.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(c.is_closed());
    }

    #[test]
    fn isolated_vertex_detection() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(has_isolated_vertex_in(&g, 0b111));
        assert!(!has_isolated_vertex_in(&g, 0b011));
        assert!(has_isolated_vertex_in(&g, 0b101));
    }
}
