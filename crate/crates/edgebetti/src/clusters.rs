//! Parabolic clusters, their Dyck-path bijection, and the row-pattern
//! constructions built from complemented cycle/tree unions.
//!
//! A k-cluster is a disjoint union of k cliques K_{a_1} ⊔ ... ⊔ K_{a_k},
//! recorded here by its sorted size vector.  The parabolic ones (a_1 = 2 and
//! 2 <= a_i <= i for i >= 2) are counted by Catalan(k-1), and
//! [`cluster_to_dyck`] realizes the counting bijection explicitly.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{self, binomial, disjoint_union, Graph};

/// Largest k accepted by [`parabolic_clusters`].  Catalan(11) = 58786 specs
/// is still cheap; past that the lists stop being useful to print.
pub const MAX_CLUSTER_K: usize = 12;

/// Vertex budget for [`section6_graph`] and [`row_pattern_graph`].
pub const MAX_CONSTRUCTION_VERTICES: usize = 20;

/// Size vector of a k-cluster, kept sorted ascending.
///
/// Two specs are equal iff they describe the same multiset of clique sizes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClusterSpec {
    parts: Vec<usize>,
}

impl ClusterSpec {
    /// Builds a spec from clique sizes in any order.
    pub fn new(parts: &[usize]) -> Result<ClusterSpec> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("a cluster needs at least one clique".into()));
        }
        if parts.iter().any(|&a| a == 0) {
            return Err(Error::InvalidInput("clique sizes must be positive".into()));
        }
        let mut parts = parts.to_vec();
        parts.sort_unstable();
        Ok(ClusterSpec { parts })
    }

    /// Number of cliques.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Total number of vertices.
    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Clique sizes, ascending.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// A k-cluster is parabolic when k >= 2, the smallest clique is an edge,
    /// and the i-th smallest clique (1-based) has at most i vertices.
    pub fn is_parabolic(&self) -> bool {
        self.k() >= 2
            && self.parts[0] == 2
            && self.parts.iter().enumerate().all(|(idx, &a)| a >= 2 && a <= idx.max(1) + 1)
    }

    /// Order minus 2k; for parabolic clusters this is the offset p of the
    /// parabolic window entry the cluster is responsible for.
    pub fn offset(&self) -> usize {
        self.order() - 2 * self.k()
    }

    /// The cluster as a graph: vertices grouped into cliques, no edges
    /// between groups.
    pub fn graph(&self) -> Result<Graph> {
        graph::cluster(&self.parts)
    }
}

impl fmt::Display for ClusterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c(")?;
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Largest offset a parabolic k-cluster can have: C(k-1, 2).
pub fn max_parabolic_offset(k: usize) -> u64 {
    binomial(k as u64 - 1, 2)
}

/// All parabolic k-clusters in lexicographic order of their size vectors.
///
/// There are Catalan(k-1) of them.
pub fn parabolic_clusters(k: usize) -> Result<Vec<ClusterSpec>> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "parabolic clusters need at least two cliques, got k = {k}"
        )));
    }
    if k > MAX_CLUSTER_K {
        return Err(Error::Capacity(format!("k = {k} exceeds {MAX_CLUSTER_K}")));
    }
    let mut out = Vec::new();
    let mut parts = vec![2usize];
    extend_parabolic(&mut parts, k, &mut out);
    Ok(out)
}

fn extend_parabolic(parts: &mut Vec<usize>, k: usize, out: &mut Vec<ClusterSpec>) {
    if parts.len() == k {
        out.push(ClusterSpec { parts: parts.clone() });
        return;
    }
    let lo = *parts.last().expect("parts starts non-empty");
    let hi = parts.len() + 1;
    for a in lo..=hi {
        parts.push(a);
        extend_parabolic(parts, k, out);
        parts.pop();
    }
}

/// Exact Catalan number C(2n, n) / (n + 1), for 0 <= n <= 30.
pub fn catalan(n: u64) -> Result<u64> {
    if n > 30 {
        return Err(Error::Capacity(format!("catalan({n}) not supported, max index is 30")));
    }
    Ok(binomial(2 * n, n) / (n + 1))
}

/// One step of a Dyck path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Up,
}

/// A balanced lattice path of Rights and Ups in which no prefix has more
/// Ups than Rights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<DyckPath> {
        let mut height = 0i64;
        for s in &steps {
            height += match s {
                Step::Right => 1,
                Step::Up => -1,
            };
            if height < 0 {
                return Err(Error::InvalidInput(
                    "path has a prefix with more Ups than Rights".into(),
                ));
            }
        }
        if height != 0 {
            return Err(Error::InvalidInput("path is not balanced".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Half the number of steps.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Right => "R",
                Step::Up => "U",
            })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<DyckPath> {
        let steps = s
            .chars()
            .map(|c| match c {
                'R' | 'r' => Ok(Step::Right),
                'U' | 'u' => Ok(Step::Up),
                other => Err(Error::InvalidInput(format!("unexpected step character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// Maps a parabolic k-cluster to a Dyck path of semilength k-1.
///
/// Writing g_x = a_{x+1} - 2 for the running excess of the size vector, the
/// path records each increment of g as a block of Ups before the x-th Right.
/// The parabolic constraint a_{x+1} <= x+1 is exactly the ballot condition
/// g_x <= x-1, so the image is always a valid path and the map is a bijection
/// onto Dyck paths of semilength k-1.
pub fn cluster_to_dyck(spec: &ClusterSpec) -> Result<DyckPath> {
    if !spec.is_parabolic() {
        return Err(Error::InvalidInput(format!("{spec} is not parabolic")));
    }
    let k = spec.k();
    let mut steps = Vec::with_capacity(2 * (k - 1));
    let mut prev = 0usize;
    for x in 1..k {
        let g = spec.parts[x] - 2;
        steps.extend(std::iter::repeat_n(Step::Up, g - prev));
        steps.push(Step::Right);
        prev = g;
    }
    steps.extend(std::iter::repeat_n(Step::Up, k - 1 - prev));
    DyckPath::new(steps)
}

/// Inverse of [`cluster_to_dyck`]: the x-th part (x >= 2) is two plus the
/// number of Ups preceding the (x-1)-th Right.
pub fn dyck_to_cluster(path: &DyckPath) -> Result<ClusterSpec> {
    let mut parts = vec![2usize];
    let mut ups = 0usize;
    for s in path.steps() {
        match s {
            Step::Up => ups += 1,
            Step::Right => parts.push(ups + 2),
        }
    }
    // Path validity gives ups-before-x-th-Right <= x-1, i.e. the parabolic
    // growth bound, and prefix counts are monotone, so this never needs a
    // re-sort.  The empty path lands on the single edge c(2), below the
    // k = 2 threshold at which "parabolic" starts to apply.
    let spec = ClusterSpec { parts };
    debug_assert!(spec.k() == 1 || spec.is_parabolic());
    Ok(spec)
}

/// The cluster as a graph; same as [`ClusterSpec::graph`], kept as a free
/// function for symmetry with the other constructions here.
pub fn cluster_graph(spec: &ClusterSpec) -> Result<Graph> {
    spec.graph()
}

fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() == g.n() - 1 && g.is_connected()
}

/// complement(C_a ⊔ T) ⊔ M_c, where T is a tree (possibly on zero vertices)
/// and M_c a perfect matching on c edges.
///
/// The independence complex of the complement part is the clique complex of
/// C_a ⊔ T, and each matching edge suspends once, which is what makes the
/// homology of these graphs fully predictable.
pub fn section6_graph(a: usize, tree: &Graph, c: usize) -> Result<Graph> {
    if a < 3 {
        return Err(Error::InvalidInput(format!("cycle length {a} is below 3")));
    }
    if tree.n() > 0 && !is_tree(tree) {
        return Err(Error::InvalidInput(
            "the second argument must be a tree (or have no vertices)".into(),
        ));
    }
    let total = a + tree.n() + 2 * c;
    if total > MAX_CONSTRUCTION_VERTICES {
        return Err(Error::Capacity(format!(
            "{total} vertices exceed the {MAX_CONSTRUCTION_VERTICES}-vertex budget"
        )));
    }
    let core = disjoint_union(&[graph::cycle(a)?, tree.clone()])?.complement();
    disjoint_union(&[core, graph::matching(c)?])
}

/// The graph complement(C_{i-2r+7} ⊔ T) ⊔ M_{r-3} whose Betti table is meant
/// to switch on along row r at column i.  The tree must have n - i + r - 4
/// vertices.
pub fn row_pattern_graph(r: usize, i: usize, n: usize, tree: &Graph) -> Result<Graph> {
    if r < 3 {
        return Err(Error::InvalidInput(format!("row {r} is below 3")));
    }
    if i + 4 < 2 * r {
        return Err(Error::InvalidInput(format!("column {i} is below 2r - 4 = {}", 2 * r - 4)));
    }
    let b = n as i64 - i as i64 + r as i64 - 4;
    if n + 4 < i + r || b < 0 {
        return Err(Error::InvalidInput(format!("n = {n} is too small for row {r}, column {i}")));
    }
    if tree.n() as i64 != b {
        return Err(Error::InvalidInput(format!(
            "tree has {} vertices, expected n - i + r - 4 = {b}",
            tree.n()
        )));
    }
    section6_graph(i + 7 - 2 * r, tree, r - 3)
}
