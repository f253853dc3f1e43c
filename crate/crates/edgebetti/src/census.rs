//! Exhaustive censuses over small graph classes: how often a parabolic Betti
//! number vanishes, how that compares with cluster-freeness and with being a
//! template, regularity statistics, induced-matching averages, and the
//! meta-graph of single-edge additions.
//!
//! Everything here runs over isomorphism classes from [`crate::enumerate`],
//! aggregates with commutative counters so worker count never changes a
//! result, and reports exact integers next to the ratios derived from them.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::ops::RangeInclusive;

use num::rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{hochster_entry, parabolic_indices, regularity, ParabolicIndex};
use crate::canon::{automorphism_count, canonical_form, CanonicalForm};
use crate::clusters::parabolic_clusters;
use crate::enumerate::{enumerate_unlabeled, MAX_ENUM_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{binomial, Graph};
use crate::homology::FieldSpec;
use crate::templates::is_template;

/// Largest n for the censuses that compute a Betti entry per class.
pub const MAX_CENSUS_VERTICES: usize = MAX_ENUM_VERTICES;

/// Largest n for the quadratic-ish studies (regularity, matchings,
/// containment, homogeneous sets).
pub const MAX_STUDY_VERTICES: usize = 8;

/// Largest n for the meta-graph.
pub const MAX_METAGRAPH_VERTICES: usize = 7;

/// One census line: for a fixed parabolic position (r, p) and a fixed n,
/// the sizes of the nested classes
/// templates (t) ⊆ vanishing entry (b) ⊆ cluster-free (h) ⊆ all graphs.
///
/// `violations_t_b` counts templates whose entry does not vanish and
/// `violations_b_h` counts vanishing graphs that contain the cluster; both
/// are zero whenever the inclusions hold, and they are reported rather than
/// asserted so a census run can never lie by omission.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub r: u64,
    pub p: u64,
    pub graphs: u64,
    pub b_vanishing: u64,
    pub h_cluster_free: u64,
    pub t_templates: u64,
    pub ratio_b_t: f64,
    pub ratio_h_t: f64,
    pub violations_t_b: u64,
    pub violations_b_h: u64,
}

#[derive(Clone, Copy, Default)]
struct Counts {
    graphs: u64,
    b: u64,
    h: u64,
    t: u64,
    t_not_b: u64,
    b_not_h: u64,
}

impl Counts {
    fn merge(self, other: Counts) -> Counts {
        Counts {
            graphs: self.graphs + other.graphs,
            b: self.b + other.b,
            h: self.h + other.h,
            t: self.t + other.t,
            t_not_b: self.t_not_b + other.t_not_b,
            b_not_h: self.b_not_h + other.b_not_h,
        }
    }
}

/// The clusters whose absence defines the h column: parabolic
/// (r-1)-clusters of order 2(r-1)+p.  The lexicographically first one is the
/// canonical choice; `all_clusters` switches to demanding freeness from all
/// of them.
pub fn census_clusters(r: u64, p: u64, all_clusters: bool) -> Result<Vec<Graph>> {
    let k = (r - 1) as usize;
    let order = 2 * k + p as usize;
    let matching: Vec<Graph> = parabolic_clusters(k)?
        .into_iter()
        .filter(|c| c.order() == order)
        .map(|c| c.graph())
        .collect::<Result<_>>()?;
    if matching.is_empty() {
        return Err(Error::InvalidInput(format!(
            "no parabolic {k}-cluster has order {order}; the offset window ends at {}",
            binomial(k as u64 - 1, 2)
        )));
    }
    Ok(if all_clusters { matching } else { matching[..1].to_vec() })
}

/// Censuses the vanishing of the parabolic entry (r, p) against
/// cluster-freeness and (r-2, 1)-templateness, one row per n.
pub fn census(
    r: u64,
    p: u64,
    ns: RangeInclusive<usize>,
    field: FieldSpec,
    all_clusters: bool,
) -> Result<Vec<CensusRow>> {
    let index = ParabolicIndex::new(r, p)?;
    let clusters = census_clusters(r, p, all_clusters)?;
    let s = (r - 2) as usize;
    let mut rows = Vec::new();
    for n in ns {
        if n > MAX_CENSUS_VERTICES {
            return Err(Error::Capacity(format!(
                "census needs n <= {MAX_CENSUS_VERTICES}, got {n}"
            )));
        }
        let classes = enumerate_unlabeled(n)?;
        let totals = classes
            .par_iter()
            .map(|g| -> Result<Counts> {
                let in_b = hochster_entry(g, index.i() as i64, index.j() as i64, field)? == 0;
                let in_h = !clusters.iter().any(|c| g.contains_induced(c));
                let in_t = is_template(g, s, 1)?;
                Ok(Counts {
                    graphs: 1,
                    b: u64::from(in_b),
                    h: u64::from(in_h),
                    t: u64::from(in_t),
                    t_not_b: u64::from(in_t && !in_b),
                    b_not_h: u64::from(in_b && !in_h),
                })
            })
            .try_reduce(Counts::default, |a, b| Ok(a.merge(b)))?;
        rows.push(CensusRow {
            n,
            r,
            p,
            graphs: totals.graphs,
            b_vanishing: totals.b,
            h_cluster_free: totals.h,
            t_templates: totals.t,
            ratio_b_t: totals.b as f64 / totals.t as f64,
            ratio_h_t: totals.h as f64 / totals.t as f64,
            violations_t_b: totals.t_not_b,
            violations_b_h: totals.b_not_h,
        });
    }
    Ok(rows)
}

/// CSV with one row per [`CensusRow`].
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from(
        "n,r,p,graphs,b_vanishing,h_cluster_free,t_templates,ratio_b_t,ratio_h_t,violations_t_b,violations_b_h\n",
    );
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            row.n,
            row.r,
            row.p,
            row.graphs,
            row.b_vanishing,
            row.h_cluster_free,
            row.t_templates,
            row.ratio_b_t,
            row.ratio_h_t,
            row.violations_t_b,
            row.violations_b_h,
        ));
    }
    out
}

/// JSON array of [`CensusRow`]s.
pub fn census_json(rows: &[CensusRow]) -> Result<String> {
    serde_json::to_string_pretty(rows)
        .map_err(|e| Error::InvalidInput(format!("serializing census rows: {e}")))
}

/// Long-format CSV with one (n, series, value) line per ratio, ready for
/// plotting ratio trajectories without reshaping.
pub fn census_long_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("n,r,p,series,value\n");
    for row in rows {
        out.push_str(&format!("{},{},{},b_over_t,{}\n", row.n, row.r, row.p, row.ratio_b_t));
        out.push_str(&format!("{},{},{},h_over_t,{}\n", row.n, row.r, row.p, row.ratio_h_t));
    }
    out
}

/// Regularity statistics over the graphs with a vanishing parabolic entry.
///
/// The edgeless graph always belongs to the vanishing class but has no
/// regularity, so it is left out of both the histogram and the fraction's
/// denominator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularityCensus {
    pub n: usize,
    pub r: u64,
    pub p: u64,
    pub histogram: BTreeMap<i64, u64>,
    pub population: u64,
    pub parabolic_above_all_nonzero: u64,
}

impl RegularityCensus {
    /// Share of the population whose parabolic entries on rows 3..r are all
    /// non-zero.
    pub fn above_nonzero_fraction(&self) -> f64 {
        if self.population == 0 {
            return 1.0;
        }
        self.parabolic_above_all_nonzero as f64 / self.population as f64
    }
}

/// Histogram of reg(I_G) over the graphs on n vertices whose parabolic entry
/// (r, p) vanishes, together with how many of them have every parabolic
/// entry above row r non-zero.
pub fn regularity_census(r: u64, p: u64, n: usize, field: FieldSpec) -> Result<RegularityCensus> {
    if n > MAX_STUDY_VERTICES {
        return Err(Error::Capacity(format!(
            "regularity census needs n <= {MAX_STUDY_VERTICES}, got {n}"
        )));
    }
    let index = ParabolicIndex::new(r, p)?;
    let above: Vec<ParabolicIndex> =
        (3..r).map(parabolic_indices).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    let classes = enumerate_unlabeled(n)?;
    let per_class = classes
        .par_iter()
        .map(|g| -> Result<Option<(i64, bool)>> {
            if g.edge_count() == 0 {
                return Ok(None);
            }
            if hochster_entry(g, index.i() as i64, index.j() as i64, field)? != 0 {
                return Ok(None);
            }
            let reg = regularity(g, field)?;
            let mut all_nonzero = true;
            for q in &above {
                if hochster_entry(g, q.i() as i64, q.j() as i64, field)? == 0 {
                    all_nonzero = false;
                    break;
                }
            }
            Ok(Some((reg, all_nonzero)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut histogram = BTreeMap::new();
    let mut population = 0;
    let mut above_ok = 0;
    for (reg, all_nonzero) in per_class.into_iter().flatten() {
        *histogram.entry(reg).or_insert(0) += 1;
        population += 1;
        above_ok += u64::from(all_nonzero);
    }
    Ok(RegularityCensus {
        n,
        r,
        p,
        histogram,
        population,
        parabolic_above_all_nonzero: above_ok,
    })
}

/// Greedy induced matching: repeatedly take the lexicographically first
/// surviving edge and discard every edge touching the closed neighborhood of
/// its endpoints.  Each round discards at most 2d^2 edges, which is where
/// the e/(2d^2) guarantee comes from.
pub fn greedy_induced_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut chosen = Vec::new();
    let mut blocked: u64 = 0;
    for (u, v) in g.edges() {
        if blocked & (1 << u) == 0 && blocked & (1 << v) == 0 {
            chosen.push((u, v));
            blocked |= g.adj(u) | g.adj(v) | (1 << u) | (1 << v);
        }
    }
    chosen
}

/// Checks that the edges exist, are pairwise disjoint, and that the induced
/// subgraph on their endpoints is exactly the matching itself.
pub fn is_induced_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut used: u64 = 0;
    for &(u, v) in edges {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return false;
        }
        let pair = (1u64 << u) | (1 << v);
        if used & pair != 0 {
            return false;
        }
        used |= pair;
    }
    for &(u, v) in edges {
        if (g.adj(u) | g.adj(v)) & used != (1 << u) | (1 << v) {
            return false;
        }
    }
    true
}

/// Exact induced matching number by branch and bound over the edge list.
pub fn induced_matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    search_matching(g, &edges, 0, 0, 0, &mut best);
    best
}

fn search_matching(
    g: &Graph,
    edges: &[(usize, usize)],
    idx: usize,
    blocked: u64,
    count: usize,
    best: &mut usize,
) {
    if count > *best {
        *best = count;
    }
    if idx == edges.len() || count + (edges.len() - idx) <= *best {
        return;
    }
    let (u, v) = edges[idx];
    if blocked & ((1 << u) | (1 << v)) == 0 {
        let with = blocked | g.adj(u) | g.adj(v) | (1 << u) | (1 << v);
        search_matching(g, edges, idx + 1, with, count + 1, best);
    }
    search_matching(g, edges, idx + 1, blocked, count, best);
}

/// Average induced matching number over the graphs whose row-2 entry in
/// column k-2 vanishes, i.e. those in which every k-subset induces a
/// subgraph with connected complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingAverage {
    pub k: usize,
    pub n: usize,
    pub class_count: u64,
    pub labeled_count: u64,
    pub unlabeled_average: Ratio<i64>,
    pub labeled_average: Ratio<i64>,
    pub bound: Ratio<i64>,
}

/// Computes both the per-isomorphism-class average of the induced matching
/// number and the average weighted by labeled multiplicity n!/|Aut|, next to
/// the (n-1)/(4(k-2)^2) lower bound.  The bound is proved for the class
/// average; which measure the statement is sharpest for is exactly why both
/// are reported.
pub fn matching_average(k: usize, n: usize, field: FieldSpec) -> Result<MatchingAverage> {
    if k < 3 {
        return Err(Error::InvalidInput(format!("k must be at least 3, got {k}")));
    }
    if n == 0 || n > MAX_STUDY_VERTICES {
        return Err(Error::Capacity(format!(
            "matching average needs 1 <= n <= {MAX_STUDY_VERTICES}, got {n}"
        )));
    }
    let classes = enumerate_unlabeled(n)?;
    let members = classes
        .par_iter()
        .map(|g| -> Result<Option<(u64, u64)>> {
            if hochster_entry(g, k as i64 - 2, k as i64, field)? != 0 {
                return Ok(None);
            }
            let iota = induced_matching_number(g) as u64;
            let weight = factorial(n) / automorphism_count(g);
            Ok(Some((iota, weight)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut class_count = 0u64;
    let mut iota_sum = 0u64;
    let mut labeled_count = 0u64;
    let mut labeled_iota_sum = 0u64;
    for (iota, weight) in members.into_iter().flatten() {
        class_count += 1;
        iota_sum += iota;
        labeled_count += weight;
        labeled_iota_sum += iota * weight;
    }
    Ok(MatchingAverage {
        k,
        n,
        class_count,
        labeled_count,
        unlabeled_average: Ratio::new(iota_sum as i64, class_count as i64),
        labeled_average: Ratio::new(labeled_iota_sum as i64, labeled_count as i64),
        bound: Ratio::new(n as i64 - 1, 4 * (k as i64 - 2).pow(2)),
    })
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// How many (d,1)-templates on n vertices contain every parabolic k-cluster
/// with k <= d as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentCensus {
    pub d: usize,
    pub n: usize,
    pub template_count: u64,
    pub containing_count: u64,
}

impl ContainmentCensus {
    pub fn fraction(&self) -> f64 {
        if self.template_count == 0 {
            return 1.0;
        }
        self.containing_count as f64 / self.template_count as f64
    }
}

/// Fraction of (d,1)-templates containing all parabolic k-clusters, k <= d.
/// For d = 1 there are no parabolic clusters at all and the fraction is 1.
pub fn template_cluster_containment(d: usize, n: usize) -> Result<ContainmentCensus> {
    if d == 0 || d > 3 {
        return Err(Error::InvalidInput(format!("d must be between 1 and 3, got {d}")));
    }
    if n > MAX_STUDY_VERTICES {
        return Err(Error::Capacity(format!(
            "containment census needs n <= {MAX_STUDY_VERTICES}, got {n}"
        )));
    }
    let mut clusters = Vec::new();
    for k in 2..=d {
        for c in parabolic_clusters(k)? {
            clusters.push(c.graph()?);
        }
    }
    let classes = enumerate_unlabeled(n)?;
    let (template_count, containing_count) = classes
        .par_iter()
        .map(|g| -> Result<(u64, u64)> {
            if !is_template(g, d, 1)? {
                return Ok((0, 0));
            }
            let contains_all = clusters.iter().all(|c| g.contains_induced(c));
            Ok((1, u64::from(contains_all)))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    Ok(ContainmentCensus { d, n, template_count, containing_count })
}

/// The meta-graph on isomorphism classes of n-vertex graphs: one node per
/// class, one edge whenever some single-edge addition turns one class into
/// the other.  Returns the classes (in enumeration order) and the deduped
/// edge list.
pub fn metagraph(n: usize) -> Result<(Vec<Graph>, Vec<(usize, usize)>)> {
    if n > MAX_METAGRAPH_VERTICES {
        return Err(Error::Capacity(format!(
            "meta-graph needs n <= {MAX_METAGRAPH_VERTICES}, got {n}"
        )));
    }
    let classes = enumerate_unlabeled(n)?;
    let index: HashMap<CanonicalForm, usize> =
        classes.iter().enumerate().map(|(i, g)| (canonical_form(g), i)).collect();
    let mut edges: Vec<(usize, usize)> = classes
        .par_iter()
        .enumerate()
        .flat_map_iter(|(from, g)| {
            let index = &index;
            let mut out = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let bigger = g.with_edge(u, v).expect("vertices in range");
                        let to = index[&canonical_form(&bigger)];
                        out.push((from, to));
                    }
                }
            }
            out
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok((classes.as_ref().clone(), edges))
}

/// Connectivity of the sub-meta-graph induced on (s,t)-templates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaGraphReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub class_count: u64,
    pub template_count: u64,
    pub restricted_edge_count: u64,
    pub component_count: u64,
}

/// Restricts the meta-graph to (s,t)-template classes and counts connected
/// components.  With no templates at all (as for (0,0) on n >= 1) the count
/// is zero.
pub fn metagraph_connectivity(n: usize, s: usize, t: usize) -> Result<MetaGraphReport> {
    let (classes, edges) = metagraph(n)?;
    let in_set: Vec<bool> =
        classes.iter().map(|g| is_template(g, s, t)).collect::<Result<_>>()?;
    let mut dsu = Dsu::new(classes.len());
    for &(a, b) in &edges {
        if in_set[a] && in_set[b] {
            dsu.union(a, b);
        }
    }
    let mut roots = std::collections::HashSet::new();
    let mut template_count = 0u64;
    for (i, &keep) in in_set.iter().enumerate() {
        if keep {
            template_count += 1;
            roots.insert(dsu.find(i));
        }
    }
    Ok(MetaGraphReport {
        n,
        s,
        t,
        class_count: classes.len() as u64,
        template_count,
        restricted_edge_count: edges
            .iter()
            .filter(|&&(a, b)| in_set[a] && in_set[b])
            .count() as u64,
        component_count: roots.len() as u64,
    })
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
        ra != rb
    }
}

/// How many graphs with a vanishing parabolic entry have a clique or an
/// independent set of the pigeonhole size ceil(n/(r-1)).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousCensus {
    pub n: usize,
    pub r: u64,
    pub p: u64,
    pub threshold: usize,
    pub population: u64,
    pub meeting: u64,
}

impl HomogeneousCensus {
    pub fn fraction(&self) -> f64 {
        if self.population == 0 {
            return 1.0;
        }
        self.meeting as f64 / self.population as f64
    }
}

/// Fraction of the vanishing class whose homogeneous set size reaches
/// ceil(n/(r-1)).
pub fn homogeneous_census(r: u64, p: u64, n: usize, field: FieldSpec) -> Result<HomogeneousCensus> {
    if n == 0 || n > MAX_STUDY_VERTICES {
        return Err(Error::Capacity(format!(
            "homogeneous census needs 1 <= n <= {MAX_STUDY_VERTICES}, got {n}"
        )));
    }
    let index = ParabolicIndex::new(r, p)?;
    let threshold = n.div_ceil((r - 1) as usize);
    let classes = enumerate_unlabeled(n)?;
    let (population, meeting) = classes
        .par_iter()
        .map(|g| -> Result<(u64, u64)> {
            if hochster_entry(g, index.i() as i64, index.j() as i64, field)? != 0 {
                return Ok((0, 0));
            }
            Ok((1, u64::from(g.homogeneous_set_size() >= threshold)))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    Ok(HomogeneousCensus { n, r, p, threshold, population, meeting })
}
