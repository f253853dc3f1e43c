//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`. Adjacency is one `u64` bitmask per vertex, so all the
//! hot subset loops elsewhere in the crate (independent-set enumeration,
//! induced-subgraph tests) are word operations. Graphs are immutable values:
//! every operation returns a new `Graph`.

use crate::error::{Error, Result};

/// Hard vertex budget. Everything in this crate stores vertex sets in a
/// single machine word.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a graph on at most 64 vertices.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Ascending vertex indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut bits = 0u64;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} out of range");
            bits |= 1 << v;
        }
        VertexSet(bits)
    }
}

/// An undirected graph without loops or multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "graphs are limited to {MAX_VERTICES} vertices, got {n}"
        )));
    }
    Ok(())
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` is allowed; the empty
    /// graph shows up as a residue of covers and must be representable.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] & !((1u64 << u) | (1u64 << u).wrapping_sub(1));
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Copy with one extra edge. Errors if the edge already exists.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidInput(format!("bad edge ({u},{v})")));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidInput(format!("edge ({u},{v}) already present")));
        }
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    /// Subgraph induced on `vs`, relabelled to `0..vs.len()` preserving the
    /// relative order of the kept vertices.
    pub fn induced(&self, vs: VertexSet) -> Graph {
        let keep: Vec<usize> = vs.iter().filter(|&v| v < self.n).collect();
        let m = keep.len();
        let mut adj = vec![0u64; m];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Graph { n: m, adj }
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// True when no two vertices of `mask` are adjacent.
    #[inline]
    pub fn is_independent(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & rest != 0 {
                return false;
            }
        }
        true
    }

    /// True when all vertices of `mask` are pairwise adjacent.
    #[inline]
    pub fn is_clique(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & rest != rest {
                return false;
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        loop {
            let mut next = seen;
            let mut rest = seen;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen == self.vertex_set().bits()
    }

    pub fn component_count(&self) -> usize {
        let mut unseen = self.vertex_set().bits();
        let mut count = 0;
        while unseen != 0 {
            count += 1;
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut next = comp;
                let mut rest = comp;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= self.adj[v];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            unseen &= !comp;
        }
        count
    }

    /// Length of a shortest cycle, or `None` for forests. Plain BFS from
    /// every vertex; fine at the orders this crate handles.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let mut rest = self.adj[u];
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        // Cycle through root (or shorter); dist sum + 1 bounds it.
                        let len = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Largest clique size, by branch and bound on bitmasks.
    pub fn max_clique_size(&self) -> usize {
        fn expand(g: &Graph, size: usize, cand: u64, best: &mut usize) {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            let mut rest = cand;
            while rest != 0 {
                if size + rest.count_ones() as usize <= *best {
                    return;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                expand(g, size + 1, rest & g.adj(v), best);
            }
        }
        let mut best = 0;
        expand(self, 0, self.vertex_set().bits(), &mut best);
        best
    }

    pub fn independence_number(&self) -> usize {
        self.complement().max_clique_size()
    }

    /// Largest clique or independent set, whichever wins.
    pub fn homogeneous_set_size(&self) -> usize {
        self.max_clique_size().max(self.independence_number())
    }

    /// True when some `|h|`-subset of vertices induces a copy of `h`.
    ///
    /// Subset enumeration with a sorted-degree-sequence filter before the
    /// isomorphism test. All callers keep `|h|` small, so exactness beats
    /// cleverness here.
    pub fn contains_induced(&self, h: &Graph) -> bool {
        let k = h.n;
        if k > self.n {
            return false;
        }
        if k == 0 {
            return true;
        }
        let h_key = crate::canon::canonical_form(h);
        let mut h_degs: Vec<usize> = (0..k).map(|v| h.degree(v)).collect();
        h_degs.sort_unstable();
        let mut found = false;
        for_each_subset(self.n, k, |mask| {
            if found {
                return;
            }
            let mut degs: Vec<usize> = Vec::with_capacity(k);
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                degs.push((self.adj[v] & mask).count_ones() as usize);
            }
            degs.sort_unstable();
            if degs != h_degs {
                return;
            }
            let sub = self.induced(VertexSet::from_bits(mask));
            if crate::canon::canonical_form(&sub) == h_key {
                found = true;
            }
        });
        found
    }

    /// Replace vertex `v` by a copy of `h`: every vertex of the copy
    /// inherits all of `v`'s neighbours, and the copy keeps its own edges.
    pub fn substitute(&self, v: usize, h: &Graph) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::InvalidInput(format!("vertex {v} out of range")));
        }
        let new_n = self.n - 1 + h.n;
        check_order(new_n)?;
        // Old vertices except v keep their indices compacted; the copy of h
        // occupies the last h.n slots.
        let old: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let mut edges = Vec::new();
        for (i, &a) in old.iter().enumerate() {
            for (j, &b) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.push((i, j));
                }
            }
        }
        let base = self.n - 1;
        for (a, b) in h.edges() {
            edges.push((base + a, base + b));
        }
        for (i, &a) in old.iter().enumerate() {
            if self.has_edge(a, v) {
                for b in 0..h.n {
                    edges.push((i, base + b));
                }
            }
        }
        Graph::from_edges(new_n, &edges)
    }
}

/// Disjoint union, parts keeping their internal labels in order.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    let n: usize = parts.iter().map(|g| g.n()).sum();
    check_order(n)?;
    let mut edges = Vec::new();
    let mut base = 0;
    for g in parts {
        for (u, v) in g.edges() {
            edges.push((base + u, base + v));
        }
        base += g.n();
    }
    Graph::from_edges(n, &edges)
}

/// Visit every `k`-subset of `0..n` as a bitmask, in ascending mask order
/// (Gosper's hack).
pub fn for_each_subset<F: FnMut(u64)>(n: usize, k: usize, mut f: F) {
    debug_assert!(n <= MAX_VERTICES);
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = VertexSet::full(n).bits();
    let mut mask = VertexSet::full(k).bits();
    loop {
        f(mask);
        if n == 64 && k == 64 {
            break;
        }
        // next k-subset
        let c = mask & mask.wrapping_neg();
        let r = mask.wrapping_add(c);
        if r > limit || r == 0 {
            break;
        }
        mask = (((mask ^ r) >> 2) / c) | r;
        if mask > limit {
            break;
        }
    }
}

/// C(n, k), saturating at `u64::MAX` instead of overflowing.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

/// Parameterized graph families used throughout the tests and examples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// Complete multipartite with the given class sizes.
    CompleteMultipartite(Vec<usize>),
    /// Disjoint union of cliques with the given sizes.
    Cluster(Vec<usize>),
    /// `c` disjoint edges.
    Matching(usize),
    Heawood,
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Complete(n) => complete(*n),
            Family::Empty(n) => Graph::empty(*n),
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::CompleteMultipartite(parts) => complete_multipartite(parts),
            Family::Cluster(parts) => cluster(parts),
            Family::Matching(c) => matching(*c),
            Family::Heawood => Ok(heawood()),
        }
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    check_order(n)?;
    let full = VertexSet::full(n).bits();
    Ok(Graph {
        n,
        adj: (0..n).map(|v| full & !(1u64 << v)).collect(),
    })
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("cycle needs >= 3 vertices, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    check_order(n)?;
    let mut class = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        class.extend(std::iter::repeat(i).take(p));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if class[u] != class[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Disjoint union of cliques `K_{a_1}, ..., K_{a_k}`.
pub fn cluster(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    check_order(n)?;
    let mut edges = Vec::new();
    let mut base = 0;
    for &p in parts {
        for u in 0..p {
            for v in u + 1..p {
                edges.push((base + u, base + v));
            }
        }
        base += p;
    }
    Graph::from_edges(n, &edges)
}

/// `c` disjoint edges on `2c` vertices.
pub fn matching(c: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..c).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edges(2 * c, &edges)
}

/// Point-line incidence graph of the Fano plane: 14 vertices, 3-regular,
/// bipartite, girth 6. Points are 0..7, line `i` is `{i, i+1, i+3}` mod 7.
pub fn heawood() -> Graph {
    let mut edges = Vec::with_capacity(21);
    for line in 0..7usize {
        for offset in [0, 1, 3] {
            edges.push(((line + offset) % 7, 7 + line));
        }
    }
    Graph::from_edges(14, &edges).expect("static construction")
}
