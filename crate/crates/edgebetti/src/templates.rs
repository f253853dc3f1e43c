//! (s, t)-templates: partitions of a graph into s cliques and t independent
//! sets, the coloring number they induce, and the residue families used to
//! test criticality from the armchair.
//!
//! A graph is an (s, t)-template when its vertices split into s cliques
//! and t independent sets (any of them empty). Adding a class never hurts,
//! so for each k either every pair with s + t = k works or some pair
//! fails; the coloring number χ_c is the smallest k where all pairs work,
//! and the failing pairs one level down are its witnesses.

use std::collections::HashSet;

use crate::canon::canonical_form;
use crate::enumerate::{enumerate_unlabeled, MAX_ENUM_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{binomial, Graph, VertexSet};

/// Covers get expensive past this.
pub const MAX_COVER_VERTICES: usize = 16;

fn check_cover_capacity(g: &Graph) -> Result<()> {
    if g.n() > MAX_COVER_VERTICES {
        return Err(Error::Capacity(format!(
            "cover search is limited to {MAX_COVER_VERTICES} vertices, graph has {}",
            g.n()
        )));
    }
    Ok(())
}

/// A witnessing partition into s cliques and t independent sets, classes
/// as vertex masks. Empty classes are kept so the shape is visible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    pub cliques: Vec<VertexSet>,
    pub independents: Vec<VertexSet>,
}

impl CoverCertificate {
    pub fn s(&self) -> usize {
        self.cliques.len()
    }

    pub fn t(&self) -> usize {
        self.independents.len()
    }
}

impl std::fmt::Display for CoverCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let list = |f: &mut std::fmt::Formatter<'_>, classes: &[VertexSet]| {
            for (i, c) in classes.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{{")?;
                for (k, v) in c.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "}}")?;
            }
            Ok(())
        };
        write!(f, "cliques: ")?;
        list(f, &self.cliques)?;
        write!(f, "  independents: ")?;
        list(f, &self.independents)
    }
}

/// True when the certificate is a genuine (s, t)-cover of g: classes are
/// disjoint, exhaustive, cliques are cliques and independents independent.
pub fn verify_certificate(g: &Graph, cert: &CoverCertificate) -> bool {
    let mut seen = 0u64;
    for c in &cert.cliques {
        if c.bits() & seen != 0 || !g.is_clique(c.bits()) {
            return false;
        }
        seen |= c.bits();
    }
    for c in &cert.independents {
        if c.bits() & seen != 0 || !g.is_independent(c.bits()) {
            return false;
        }
        seen |= c.bits();
    }
    seen == g.vertex_set().bits()
}

struct CoverSearch<'a> {
    g: &'a Graph,
    cliques: Vec<u64>,
    independents: Vec<u64>,
}

impl CoverSearch<'_> {
    fn feasible(&self, v: usize) -> Vec<(bool, usize)> {
        // (is_clique_class, index); empty classes collapse to the first of
        // their kind, interchangeable by symmetry
        let mut out = Vec::new();
        let mut empty_seen = false;
        for (i, &mask) in self.cliques.iter().enumerate() {
            if mask == 0 {
                if !empty_seen {
                    out.push((true, i));
                    empty_seen = true;
                }
            } else if mask & !self.g.adj(v) == 0 {
                out.push((true, i));
            }
        }
        let mut empty_seen = false;
        for (i, &mask) in self.independents.iter().enumerate() {
            if mask == 0 {
                if !empty_seen {
                    out.push((false, i));
                    empty_seen = true;
                }
            } else if mask & self.g.adj(v) == 0 {
                out.push((false, i));
            }
        }
        out
    }

    fn solve(&mut self, assigned: u64) -> bool {
        let unassigned = self.g.vertex_set().bits() & !assigned;
        if unassigned == 0 {
            return true;
        }
        let mut best: Option<(usize, Vec<(bool, usize)>)> = None;
        let mut rest = unassigned;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let choices = self.feasible(v);
            if choices.is_empty() {
                return false;
            }
            let better = best.as_ref().is_none_or(|(_, b)| choices.len() < b.len());
            if better {
                let single = choices.len() == 1;
                best = Some((v, choices));
                if single {
                    break;
                }
            }
        }
        let (v, choices) = best.unwrap();
        for (is_clique, i) in choices {
            let classes = if is_clique { &mut self.cliques } else { &mut self.independents };
            classes[i] |= 1 << v;
            if self.solve(assigned | 1 << v) {
                return true;
            }
            let classes = if is_clique { &mut self.cliques } else { &mut self.independents };
            classes[i] &= !(1 << v);
        }
        false
    }
}

/// Search for an (s, t)-cover of g.
pub fn cover(g: &Graph, s: usize, t: usize) -> Result<Option<CoverCertificate>> {
    check_cover_capacity(g)?;
    let mut search = CoverSearch {
        g,
        cliques: vec![0; s],
        independents: vec![0; t],
    };
    if !search.solve(0) {
        return Ok(None);
    }
    let cert = CoverCertificate {
        cliques: search.cliques.iter().map(|&m| VertexSet::from_bits(m)).collect(),
        independents: search.independents.iter().map(|&m| VertexSet::from_bits(m)).collect(),
    };
    debug_assert!(verify_certificate(g, &cert));
    Ok(Some(cert))
}

pub fn is_template(g: &Graph, s: usize, t: usize) -> Result<bool> {
    Ok(cover(g, s, t)?.is_some())
}

/// χ_c and the pairs that fail one level below it, by descending s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringNumber {
    pub chi_c: usize,
    pub witnessing: Vec<(usize, usize)>,
}

/// Smallest k such that g is an (s, t)-template for every s + t = k.
pub fn coloring_number(g: &Graph) -> Result<ColoringNumber> {
    check_cover_capacity(g)?;
    let mut previous_failures: Vec<(usize, usize)> = Vec::new();
    for k in 0..=g.n() {
        let mut failures = Vec::new();
        for s in (0..=k).rev() {
            if !is_template(g, s, k - s)? {
                failures.push((s, k - s));
            }
        }
        if failures.is_empty() {
            return Ok(ColoringNumber {
                chi_c: k,
                witnessing: previous_failures,
            });
        }
        previous_failures = failures;
    }
    unreachable!("singleton classes cover every graph at k = n")
}

/// The residue family F(h, s, t): what is left of h after deleting an
/// (s, t)-template part, reduced to the minimal graphs under induced
/// containment. Deleting nothing is allowed (the empty graph is a
/// template), so h itself is always a candidate; if h is itself a
/// template the whole family collapses to the graph on no vertices.
pub fn residue_family(h: &Graph, s: usize, t: usize) -> Result<Vec<Graph>> {
    check_cover_capacity(h)?;
    let n = h.n();
    let full = h.vertex_set().bits();
    let mut seen = HashSet::new();
    let mut candidates: Vec<Graph> = Vec::new();
    for u in 0..1u64 << n {
        if !is_template(&h.induced(VertexSet::from_bits(u)), s, t)? {
            continue;
        }
        let residue = h.induced(VertexSet::from_bits(full & !u));
        if seen.insert(canonical_form(&residue)) {
            candidates.push(residue);
        }
    }
    let mut minimal: Vec<Graph> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && other.n() <= c.n() && c.contains_induced(other));
        if !dominated {
            minimal.push(c.clone());
        }
    }
    minimal.sort_by_key(|g| (g.n(), g.edge_count(), canonical_form(g)));
    Ok(minimal)
}

/// All n-vertex graphs with no induced copy of any member of the family.
pub fn p_family(n: usize, family: &[Graph]) -> Result<Vec<Graph>> {
    let graphs = enumerate_unlabeled(n)?;
    Ok(graphs
        .iter()
        .filter(|g| !family.iter().any(|f| g.contains_induced(f)))
        .cloned()
        .collect())
}

/// Sampled stand-in for [`p_family`] past the enumeration limit: distinct
/// family-free isomorphism classes found among `samples` G(n, 1/2) draws.
/// A lower bound on the classes, nothing more.
pub fn p_family_sampled(n: usize, family: &[Graph], samples: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in crate::enumerate::sample_graphs(n, samples, seed)? {
        if family.iter().any(|f| g.contains_induced(f)) {
            continue;
        }
        if seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriticalityVerdict {
    Critical,
    NotCritical,
    Inconclusive,
}

impl std::fmt::Display for CriticalityVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CriticalityVerdict::Critical => "CRITICAL",
            CriticalityVerdict::NotCritical => "NOT CRITICAL",
            CriticalityVerdict::Inconclusive => "INCONCLUSIVE",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct WindowRow {
    pub n: usize,
    pub count: usize,
    pub has_complete: bool,
    pub has_empty: bool,
    /// every member is K_n or the empty graph
    pub trivial_only: bool,
}

#[derive(Clone, Debug)]
pub struct PairReport {
    pub s: usize,
    pub t: usize,
    pub family: Vec<Graph>,
    pub rows: Vec<WindowRow>,
    /// the presence sets collapse: only K_n / empty_n survive, with a
    /// stable membership pattern at the tail of the window
    pub collapsing: bool,
    /// the presence counts keep growing and ended above 2
    pub divergent: bool,
}

#[derive(Clone, Debug)]
pub struct CriticalityReport {
    pub coloring: ColoringNumber,
    pub verdict: CriticalityVerdict,
    pub pairs: Vec<PairReport>,
}

/// Desk test for criticality of h.
///
/// For every pair (s, t) one level below the witnesses (s + t = χ_c - 2),
/// compute the residue family and watch its presence sets P(n, F) over a
/// window of sizes ending at `n_max`:
///
/// * every pair collapses (presence sets inside {K_n, empty_n}, membership
///   pattern constant over the last three sizes): CRITICAL;
/// * some pair diverges (counts non-decreasing across the window, ending
///   above 2): NOT CRITICAL;
/// * anything else: INCONCLUSIVE.
///
/// The window starts at |h| but is clamped to n_max - 2 so that at least
/// three sizes are always inspected, which keeps graphs larger than the
/// enumeration limit (the bigger parabolic clusters) testable.
pub fn is_critical_desk(h: &Graph, n_max: usize) -> Result<CriticalityReport> {
    if h.n() == 0 {
        return Err(Error::InvalidInput("criticality needs at least one vertex".into()));
    }
    check_cover_capacity(h)?;
    if !(3..=MAX_ENUM_VERTICES).contains(&n_max) {
        return Err(Error::InvalidInput(format!(
            "window end must be between 3 and {MAX_ENUM_VERTICES}, got {n_max}"
        )));
    }
    let coloring = coloring_number(h)?;
    let mut pairs = Vec::new();
    if coloring.chi_c >= 2 {
        let level = coloring.chi_c - 2;
        let n_lo = h.n().min(n_max - 2).max(1);
        for s in (0..=level).rev() {
            let t = level - s;
            let family = residue_family(h, s, t)?;
            let mut rows = Vec::new();
            for n in n_lo..=n_max {
                let present = p_family(n, &family)?;
                let all = binomial(n as u64, 2);
                let has_complete = present.iter().any(|g| g.edge_count() as u64 == all);
                let has_empty = present.iter().any(|g| g.edge_count() == 0);
                let trivial_only = present
                    .iter()
                    .all(|g| g.edge_count() == 0 || g.edge_count() as u64 == all);
                rows.push(WindowRow {
                    n,
                    count: present.len(),
                    has_complete,
                    has_empty,
                    trivial_only,
                });
            }
            let tail = &rows[rows.len() - rows.len().min(3)..];
            let collapsing = rows.iter().all(|r| r.trivial_only)
                && tail
                    .windows(2)
                    .all(|w| w[0].has_complete == w[1].has_complete && w[0].has_empty == w[1].has_empty);
            let divergent = rows.last().is_some_and(|r| r.count > 2)
                && rows.windows(2).all(|w| w[0].count <= w[1].count);
            pairs.push(PairReport {
                s,
                t,
                family,
                rows,
                collapsing,
                divergent,
            });
        }
    }
    let verdict = if pairs.iter().all(|p| p.collapsing) {
        CriticalityVerdict::Critical
    } else if pairs.iter().any(|p| p.divergent) {
        CriticalityVerdict::NotCritical
    } else {
        CriticalityVerdict::Inconclusive
    };
    Ok(CriticalityReport {
        coloring,
        verdict,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cluster, complete, cycle, disjoint_union, matching, path, Graph};

    fn family_is(family: &[Graph], expected: &[Graph]) -> bool {
        family.len() == expected.len()
            && expected
                .iter()
                .all(|e| family.iter().any(|f| crate::canon::isomorphic(f, e)))
    }

    #[test]
    fn cover_basics() {
        let c5 = cycle(5).unwrap();
        assert!(cover(&c5, 0, 2).unwrap().is_none(), "odd cycle is not bipartite");
        assert!(cover(&c5, 1, 1).unwrap().is_none());
        assert!(cover(&c5, 2, 0).unwrap().is_none());
        let cert = cover(&c5, 1, 2).unwrap().unwrap();
        assert!(verify_certificate(&c5, &cert));
        assert_eq!(cert.s(), 1);
        assert_eq!(cert.t(), 2);
    }

    #[test]
    fn zero_vertex_graph_is_a_template_for_everything() {
        let g = Graph::empty(0).unwrap();
        assert!(is_template(&g, 0, 0).unwrap());
        let cert = cover(&g, 2, 1).unwrap().unwrap();
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn certificates_are_rejected_when_wrong() {
        let g = path(3).unwrap();
        let cert = CoverCertificate {
            cliques: vec![VertexSet::from_bits(0b011)],
            independents: vec![VertexSet::from_bits(0b110)],
        };
        // overlap at vertex 1
        assert!(!verify_certificate(&g, &cert));
        let cert = CoverCertificate {
            cliques: vec![VertexSet::from_bits(0b101)],
            independents: vec![VertexSet::from_bits(0b010)],
        };
        // {0, 2} is not a clique in the path 0-1-2
        assert!(!verify_certificate(&g, &cert));
        let cert = CoverCertificate {
            cliques: vec![VertexSet::from_bits(0b011)],
            independents: vec![VertexSet::from_bits(0b100)],
        };
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn extra_classes_never_hurt() {
        for g in crate::enumerate::enumerate_unlabeled(5).unwrap().iter() {
            for s in 0..=3 {
                for t in 0..=3 {
                    if is_template(g, s, t).unwrap() {
                        assert!(is_template(g, s + 1, t).unwrap(), "{g:?} ({s},{t})");
                        assert!(is_template(g, s, t + 1).unwrap(), "{g:?} ({s},{t})");
                    }
                }
            }
        }
    }

    #[test]
    fn induced_subgraphs_inherit_templates() {
        for g in crate::enumerate::enumerate_unlabeled(5).unwrap().iter().step_by(2) {
            for s in 0..=2 {
                for t in 0..=2 {
                    if !is_template(g, s, t).unwrap() {
                        continue;
                    }
                    for mask in 0..1u64 << g.n() {
                        let sub = g.induced(VertexSet::from_bits(mask));
                        assert!(is_template(&sub, s, t).unwrap(), "{g:?} mask {mask:#b}");
                    }
                }
            }
        }
    }

    #[test]
    fn coloring_number_of_cycles() {
        let c5 = coloring_number(&cycle(5).unwrap()).unwrap();
        assert_eq!(c5.chi_c, 3);
        assert_eq!(c5.witnessing, vec![(2, 0), (1, 1), (0, 2)]);
        let c7 = coloring_number(&cycle(7).unwrap()).unwrap();
        assert_eq!(c7.chi_c, 4);
        assert_eq!(c7.witnessing, vec![(3, 0), (2, 1)]);
    }

    #[test]
    fn coloring_number_extremes() {
        assert_eq!(coloring_number(&Graph::empty(0).unwrap()).unwrap().chi_c, 0);
        let k1 = coloring_number(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k1.chi_c, 1);
        assert_eq!(k1.witnessing, vec![(0, 0)]);
        assert_eq!(coloring_number(&Graph::empty(6).unwrap()).unwrap().chi_c, 6);
        assert_eq!(coloring_number(&complete(6).unwrap()).unwrap().chi_c, 6);
    }

    #[test]
    fn cluster_coloring_number_and_witness() {
        // size vectors inside the parabolic window (a_1 = a_2 = 2,
        // non-decreasing, a_j <= j) witness only at (k-1, 1)
        for sizes in [vec![2, 2], vec![2, 2, 2], vec![2, 2, 3], vec![2, 2, 3, 4]] {
            let g = cluster(&sizes).unwrap();
            let k = sizes.len();
            let c = coloring_number(&g).unwrap();
            assert_eq!(c.chi_c, k + 1, "{sizes:?}");
            assert_eq!(c.witnessing, vec![(k - 1, 1)], "{sizes:?}");
        }
        // outside the window the pairs with more independent classes start
        // failing too
        let c = coloring_number(&cluster(&[2, 3, 4]).unwrap()).unwrap();
        assert_eq!(c.chi_c, 4);
        assert_eq!(c.witnessing, vec![(2, 1), (1, 2), (0, 3)]);
    }

    #[test]
    fn residue_families_of_the_seven_cycle() {
        let c7 = cycle(7).unwrap();
        let p2_k1 = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(family_is(
            &residue_family(&c7, 2, 0).unwrap(),
            &[path(3).unwrap(), p2_k1]
        ));
        assert!(family_is(
            &residue_family(&c7, 1, 1).unwrap(),
            &[Graph::empty(2).unwrap()]
        ));
        assert!(family_is(
            &residue_family(&c7, 0, 2).unwrap(),
            &[Graph::empty(1).unwrap()]
        ));
    }

    #[test]
    fn residue_family_of_a_template_is_the_empty_graph() {
        let g = cluster(&[2, 3]).unwrap();
        let family = residue_family(&g, 2, 0).unwrap();
        assert_eq!(family.len(), 1);
        assert_eq!(family[0].n(), 0);
    }

    #[test]
    fn residue_family_members_are_minimal_and_incomparable() {
        for (s, t) in [(1, 0), (0, 1), (1, 1), (2, 0)] {
            let family = residue_family(&cycle(6).unwrap(), s, t).unwrap();
            for (i, a) in family.iter().enumerate() {
                for (j, b) in family.iter().enumerate() {
                    if i != j {
                        assert!(!a.contains_induced(b), "({s},{t}): {a:?} contains {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn p_family_of_the_path_is_the_cluster_count() {
        // P_3-free graphs are disjoint unions of cliques, counted by
        // partitions: 7, 11, 15, 22 for n = 5..8
        let family = vec![path(3).unwrap()];
        let want = [(5, 7), (6, 11), (7, 15), (8, 22)];
        for (n, count) in want {
            assert_eq!(p_family(n, &family).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn p_family_with_a_zero_vertex_member_is_empty() {
        let family = vec![Graph::empty(0).unwrap()];
        assert!(p_family(5, &family).unwrap().is_empty());
    }

    #[test]
    fn sampled_p_family_is_a_subset() {
        let family = vec![path(3).unwrap()];
        let exact: std::collections::HashSet<_> = p_family(7, &family)
            .unwrap()
            .iter()
            .map(crate::canon::canonical_form)
            .collect();
        for g in p_family_sampled(7, &family, 200, 11).unwrap() {
            assert!(exact.contains(&crate::canon::canonical_form(&g)));
        }
    }

    #[test]
    fn desk_verdicts_for_the_named_graphs() {
        let critical: Vec<Graph> = vec![
            cycle(7).unwrap(),
            path(5).unwrap(),
            disjoint_union(&[path(3).unwrap(), path(2).unwrap()]).unwrap(),
            cluster(&[2, 2, 3]).unwrap(),
        ];
        for g in critical {
            let report = is_critical_desk(&g, 8).unwrap();
            assert_eq!(report.verdict, CriticalityVerdict::Critical, "{g:?}");
        }
        let not_critical: Vec<Graph> = vec![
            cycle(5).unwrap(),
            // bowtie: two triangles sharing a vertex
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap(),
            disjoint_union(&[complete(3).unwrap(), complete(2).unwrap()]).unwrap(),
        ];
        for g in not_critical {
            let report = is_critical_desk(&g, 8).unwrap();
            assert_eq!(report.verdict, CriticalityVerdict::NotCritical, "{g:?}");
        }
    }

    #[test]
    fn desk_report_details_for_the_five_cycle() {
        let report = is_critical_desk(&cycle(5).unwrap(), 8).unwrap();
        assert_eq!(report.coloring.chi_c, 3);
        assert_eq!(report.pairs.len(), 2);
        let pair = &report.pairs[0];
        assert_eq!((pair.s, pair.t), (1, 0));
        assert!(family_is(&pair.family, &[path(3).unwrap()]));
        let counts: Vec<usize> = pair.rows.iter().map(|r| r.count).collect();
        assert_eq!(counts, vec![7, 11, 15, 22]);
        assert!(pair.divergent);
        assert!(!pair.collapsing);
    }

    #[test]
    fn desk_window_clamps_for_large_graphs() {
        // an order-11 cluster only fits below the window end, so the clamp
        // must kick in rather than producing an empty window
        let g = cluster(&[2, 2, 3, 4]).unwrap();
        let report = is_critical_desk(&g, 8).unwrap();
        assert_eq!(report.verdict, CriticalityVerdict::Critical);
        for pair in &report.pairs {
            let sizes: Vec<usize> = pair.rows.iter().map(|r| r.n).collect();
            assert_eq!(sizes, vec![6, 7, 8]);
        }
    }

    #[test]
    fn desk_rejects_bad_inputs() {
        assert!(is_critical_desk(&Graph::empty(0).unwrap(), 8).is_err());
        assert!(is_critical_desk(&cycle(5).unwrap(), 2).is_err());
        assert!(is_critical_desk(&cycle(5).unwrap(), 10).is_err());
    }

    #[test]
    fn matchings_are_critical() {
        for c in 1..=3 {
            let report = is_critical_desk(&matching(c).unwrap(), 8).unwrap();
            assert_eq!(report.verdict, CriticalityVerdict::Critical, "c = {c}");
        }
    }

    #[test]
    fn bowtie_residue_family_detail() {
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(family_is(
            &residue_family(&bowtie, 1, 0).unwrap(),
            &[complete(2).unwrap()]
        ));
        assert!(family_is(
            &residue_family(&bowtie, 0, 1).unwrap(),
            &[path(3).unwrap(), matching(2).unwrap()]
        ));
    }
}
