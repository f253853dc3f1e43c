//! Graded Betti numbers of edge ideals.
//!
//! For a graph G on vertices x_1..x_n, the edge ideal I_G is generated by
//! the monomials x_u x_v over the edges. Its graded Betti numbers reduce to
//! independence-complex homology of induced subgraphs:
//!
//! ```text
//! β_{i,j}(I_G) = Σ_{|W| = j} dim H~_{j-i-2}( Ind(G[W]) )
//! ```
//!
//! so everything in this module is a sum of the ranks computed in
//! [`crate::homology`], over vertex subsets of a fixed size (one entry) or
//! all of them at once (the full table). Tables index like the usual
//! Macaulay-style display for the *ideal*: the entry in column i and row
//! r = j - i is β_{i, i+r}, rows 0 and 1 vanish identically, and row 2 is
//! the linear strand starting with β_{0,2} = |E(G)|.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{binomial, Graph};
use crate::homology::{ind_homology_masked, ind_profile_masked, FieldSpec};

/// Subset sums over 2^n get steep past this.
pub const MAX_BETTI_VERTICES: usize = 16;

fn check_capacity(g: &Graph) -> Result<()> {
    if g.n() > MAX_BETTI_VERTICES {
        return Err(Error::Capacity(format!(
            "Betti computations are limited to {MAX_BETTI_VERTICES} vertices, graph has {}",
            g.n()
        )));
    }
    Ok(())
}

/// A single β_{i,j}(I_G) by the subset-homology sum. Out-of-range indices
/// give 0 rather than an error.
pub fn hochster_entry(g: &Graph, i: i64, j: i64, field: FieldSpec) -> Result<u64> {
    check_capacity(g)?;
    if i < 0 || j < 0 || j > g.n() as i64 {
        return Ok(0);
    }
    let d = j - i - 2;
    if d < 0 {
        return Ok(0);
    }
    let mut masks = Vec::new();
    crate::graph::for_each_subset(g.n(), j as usize, |m| masks.push(m));
    let total: u128 = masks
        .par_iter()
        .map(|&mask| ind_homology_masked(g, mask, d, field) as u128)
        .sum();
    u64::try_from(total).map_err(|_| Error::Capacity("Betti number exceeds u64".into()))
}

/// The full Betti table of I_G over the given field.
pub fn betti_table(g: &Graph, field: FieldSpec) -> Result<BettiTable> {
    check_capacity(g)?;
    let n = g.n();
    let entries = (0u64..1 << n)
        .into_par_iter()
        .try_fold(BTreeMap::new, |mut acc: BTreeMap<(i64, i64), u64>, mask| {
            let j = mask.count_ones() as i64;
            for (d, h) in ind_profile_masked(g, mask, field).entries() {
                let i = j - d - 2;
                if i >= 0 {
                    let slot = acc.entry((i, j)).or_insert(0);
                    *slot = slot
                        .checked_add(h)
                        .ok_or_else(|| Error::Capacity("Betti number exceeds u64".into()))?;
                }
            }
            Ok(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                let slot = a.entry(k).or_insert(0);
                *slot = slot
                    .checked_add(v)
                    .ok_or_else(|| Error::Capacity("Betti number exceeds u64".into()))?;
            }
            Ok(a)
        })?;
    Ok(BettiTable {
        n,
        field: field.p(),
        entries,
    })
}

/// Castelnuovo-Mumford regularity of I_G, the largest j - i with
/// β_{i,j} != 0. The zero ideal (edgeless graph) has no Betti numbers at
/// all, so no regularity.
pub fn regularity(g: &Graph, field: FieldSpec) -> Result<i64> {
    if g.edge_count() == 0 {
        return Err(Error::UndefinedRegularity);
    }
    let table = betti_table(g, field)?;
    Ok(table.regularity().expect("an edge gives the table an entry"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "TableRepr", into = "TableRepr")]
pub struct BettiTable {
    n: usize,
    field: u64,
    entries: BTreeMap<(i64, i64), u64>,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field_order(&self) -> u64 {
        self.field
    }

    pub fn entry(&self, i: i64, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as ((i, j), β_{i,j}), sorted by (i, j).
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Row indices r = j - i with a nonzero entry, ascending.
    pub fn rows(&self) -> Vec<i64> {
        let mut rows: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }

    /// Nonzero entries of row r as (i, β_{i, i+r}), ascending in i.
    pub fn row(&self, r: i64) -> Vec<(i64, u64)> {
        let mut out: Vec<(i64, u64)> = self
            .entries
            .iter()
            .filter(|&(&(i, j), _)| j - i == r)
            .map(|(&(i, _), &v)| (i, v))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    pub fn projective_dimension(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn total_betti_number(&self, i: i64) -> u64 {
        self.entries
            .iter()
            .filter(|&(&(ei, _), _)| ei == i)
            .map(|(_, &v)| v)
            .sum()
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "zero ideal: empty Betti table");
        }
        let max_i = self.projective_dimension().unwrap();
        let rows = self.rows();
        let (&rmin, &rmax) = (rows.first().unwrap(), rows.last().unwrap());
        let mut width = 3;
        for &v in self.entries.values() {
            width = width.max(v.to_string().len());
        }
        write!(f, "     ")?;
        for i in 0..=max_i {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        for r in rmin..=rmax {
            write!(f, "{r:>4}:")?;
            for i in 0..=max_i {
                let v = self.entry(i, i + r);
                if v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    n: usize,
    field: u64,
    entries: Vec<EntryRepr>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    i: i64,
    j: i64,
    value: u64,
}

impl From<TableRepr> for BettiTable {
    fn from(r: TableRepr) -> BettiTable {
        BettiTable {
            n: r.n,
            field: r.field,
            entries: r
                .entries
                .into_iter()
                .filter(|e| e.value != 0)
                .map(|e| ((e.i, e.j), e.value))
                .collect(),
        }
    }
}

impl From<BettiTable> for TableRepr {
    fn from(t: BettiTable) -> TableRepr {
        TableRepr {
            n: t.n,
            field: t.field,
            entries: t
                .entries
                .into_iter()
                .map(|((i, j), value)| EntryRepr { i, j, value })
                .collect(),
        }
    }
}

/// Position in the parabola-shaped window of row r: offsets p run from 0
/// through C(r-2, 2). The (i, j) coordinates of offset p in row r are
/// i = r - 2 + p and j = 2(r - 1) + p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicIndex {
    pub r: u64,
    pub p: u64,
}

impl ParabolicIndex {
    pub fn new(r: u64, p: u64) -> Result<ParabolicIndex> {
        if r < 3 {
            return Err(Error::InvalidInput(format!(
                "parabolic window starts at row 3, got row {r}"
            )));
        }
        let cap = binomial(r - 2, 2);
        if p > cap {
            return Err(Error::InvalidInput(format!(
                "offset {p} exceeds the row-{r} window bound C({}, 2) = {cap}",
                r - 2
            )));
        }
        Ok(ParabolicIndex { r, p })
    }

    pub fn i(&self) -> u64 {
        self.r - 2 + self.p
    }

    pub fn j(&self) -> u64 {
        2 * (self.r - 1) + self.p
    }
}

impl std::fmt::Display for ParabolicIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}) in row {} at offset {}", self.i(), self.j(), self.r, self.p)
    }
}

/// Whether (i, j) lies in the parabolic window of its row.
pub fn is_parabolic(i: i64, j: i64) -> bool {
    let r = j - i;
    if r < 3 || i < r - 2 {
        return false;
    }
    let p = (i - (r - 2)) as i128;
    let r = r as i128;
    p <= (r - 2) * (r - 3) / 2
}

/// The parabolic window of row r, by ascending offset. Rows below 3 have
/// an empty window.
pub fn parabolic_indices(r: u64) -> Result<Vec<ParabolicIndex>> {
    if r < 3 {
        return Ok(Vec::new());
    }
    let count = binomial(r - 2, 2) + 1;
    if count > 1 << 20 {
        return Err(Error::Capacity(format!("row {r} window has {count} entries")));
    }
    (0..count).map(|p| ParabolicIndex::new(r, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, heawood, matching, path, Graph};

    fn gf2() -> FieldSpec {
        FieldSpec::gf2()
    }

    #[test]
    fn single_edge() {
        let t = betti_table(&complete(2).unwrap(), gf2()).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 2), 1)]);
        assert_eq!(t.regularity(), Some(2));
    }

    #[test]
    fn edgeless_graph_has_zero_table_and_no_regularity() {
        let t = betti_table(&Graph::empty(4).unwrap(), gf2()).unwrap();
        assert!(t.is_zero());
        assert_eq!(t.regularity(), None);
        assert!(matches!(
            regularity(&Graph::empty(4).unwrap(), gf2()),
            Err(Error::UndefinedRegularity)
        ));
    }

    #[test]
    fn path_on_three_vertices() {
        let t = betti_table(&path(3).unwrap(), gf2()).unwrap();
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![((0, 2), 2), ((1, 3), 1)]
        );
    }

    #[test]
    fn complete_graphs_have_the_eagon_northcott_linear_strand() {
        // β_{i, i+2}(I_{K_n}) = (i + 1) C(n, i + 2), everything in row 2
        for n in 2..=6u64 {
            let t = betti_table(&complete(n as usize).unwrap(), gf2()).unwrap();
            assert_eq!(t.rows(), vec![2], "K_{n} resolution is linear");
            for i in 0..=(n - 2) as i64 {
                let want = (i as u64 + 1) * binomial(n, i as u64 + 2);
                assert_eq!(t.entry(i, i + 2), want, "K_{n}, i = {i}");
            }
        }
    }

    #[test]
    fn five_cycle_table() {
        let t = betti_table(&cycle(5).unwrap(), gf2()).unwrap();
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![((0, 2), 5), ((1, 3), 5), ((2, 5), 1)]
        );
        assert_eq!(t.regularity(), Some(3));
        assert_eq!(t.projective_dimension(), Some(2));
    }

    #[test]
    fn cycle_regularity_follows_the_mod_three_pattern() {
        // reg I(C_n) = floor(n/3) + 1, plus one more when n ≡ 2 (mod 3)
        let want = [(3, 2), (4, 2), (5, 3), (6, 3), (7, 3), (8, 4), (9, 4)];
        for (n, r) in want {
            assert_eq!(regularity(&cycle(n).unwrap(), gf2()).unwrap(), r, "C_{n}");
        }
    }

    #[test]
    fn induced_matchings_push_regularity_up() {
        for m in 1..=4 {
            assert_eq!(
                regularity(&matching(m).unwrap(), gf2()).unwrap(),
                m as i64 + 1,
                "{m} disjoint edges"
            );
        }
    }

    #[test]
    fn hochster_entries_match_the_table() {
        for g in crate::enumerate::enumerate_unlabeled(5).unwrap().iter() {
            let t = betti_table(g, gf2()).unwrap();
            for i in -1..=4 {
                for j in -1..=6 {
                    assert_eq!(
                        hochster_entry(g, i, j, gf2()).unwrap(),
                        t.entry(i, j),
                        "{g:?} at ({i}, {j})"
                    );
                }
            }
        }
    }

    #[test]
    fn low_rows_and_far_columns_vanish() {
        // rows 0 and 1 are always zero, and a flag complex needs 2d + 2
        // vertices to carry degree-d homology, so β_{i,j} = 0 past
        // j = 2i + 2 (the window-start diagonal)
        for g in crate::enumerate::enumerate_unlabeled(6).unwrap().iter().step_by(3) {
            let t = betti_table(g, gf2()).unwrap();
            for ((i, j), v) in t.entries() {
                assert!(j - i >= 2, "{g:?}: nonzero in row {}", j - i);
                assert!(j <= 2 * i + 2, "{g:?}: β_{{{i},{j}}} = {v} beyond the diagonal");
            }
        }
    }

    #[test]
    fn first_column_counts_edges() {
        for g in crate::enumerate::enumerate_unlabeled(5).unwrap().iter() {
            let t = betti_table(g, gf2()).unwrap();
            assert_eq!(t.entry(0, 2), g.edge_count() as u64);
        }
    }

    #[test]
    fn tables_over_different_fields_share_the_graded_structure() {
        // char-dependent tables need a flag triangulation of a torsion
        // space, out of reach below 11 vertices; at this size the tables
        // must agree outright
        let g2 = gf2();
        let g3 = FieldSpec::new(3).unwrap();
        for g in crate::enumerate::enumerate_unlabeled(6).unwrap().iter().step_by(11) {
            let a = betti_table(g, g2).unwrap();
            let b = betti_table(g, g3).unwrap();
            assert_eq!(
                a.entries().collect::<Vec<_>>(),
                b.entries().collect::<Vec<_>>(),
                "{g:?}"
            );
        }
    }

    #[test]
    fn heawood_complement_anchor_entries() {
        let g = heawood().complement();
        assert_eq!(hochster_entry(&g, 0, 2, gf2()).unwrap(), 70);
        assert_eq!(g.edge_count(), 70);
        assert_eq!(hochster_entry(&g, 11, 14, gf2()).unwrap(), 8);
        assert_eq!(hochster_entry(&g, 2, 5, gf2()).unwrap(), 0);
        assert_eq!(hochster_entry(&g, 3, 6, gf2()).unwrap(), 28);
    }

    #[test]
    fn out_of_range_indices_give_zero() {
        let g = cycle(5).unwrap();
        assert_eq!(hochster_entry(&g, -1, 2, gf2()).unwrap(), 0);
        assert_eq!(hochster_entry(&g, 3, 2, gf2()).unwrap(), 0);
        assert_eq!(hochster_entry(&g, 0, 6, gf2()).unwrap(), 0);
        assert_eq!(hochster_entry(&g, 0, -2, gf2()).unwrap(), 0);
    }

    #[test]
    fn capacity_is_enforced() {
        let g = Graph::empty(17).unwrap();
        assert!(matches!(betti_table(&g, gf2()), Err(Error::Capacity(_))));
        assert!(matches!(hochster_entry(&g, 0, 2, gf2()), Err(Error::Capacity(_))));
    }

    #[test]
    fn serde_roundtrip() {
        let t = betti_table(&cycle(5).unwrap(), gf2()).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        let back: BettiTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert!(json.contains("\"value\":5"));
    }

    #[test]
    fn display_layout() {
        let t = betti_table(&cycle(5).unwrap(), gf2()).unwrap();
        let text = t.to_string();
        assert!(text.contains("2:"));
        assert!(text.contains("3:"));
        assert!(text.contains('.'));
    }

    #[test]
    fn parabolic_windows_match_the_row_size() {
        let r3: Vec<(u64, u64)> = parabolic_indices(3).unwrap().iter().map(|p| (p.i(), p.j())).collect();
        assert_eq!(r3, vec![(1, 4)]);
        let r4: Vec<(u64, u64)> = parabolic_indices(4).unwrap().iter().map(|p| (p.i(), p.j())).collect();
        assert_eq!(r4, vec![(2, 6), (3, 7)]);
        let r5: Vec<(u64, u64)> = parabolic_indices(5).unwrap().iter().map(|p| (p.i(), p.j())).collect();
        assert_eq!(r5, vec![(3, 8), (4, 9), (5, 10), (6, 11)]);
        assert!(parabolic_indices(2).unwrap().is_empty());
    }

    #[test]
    fn is_parabolic_agrees_with_the_window_lists() {
        let mut in_window = std::collections::HashSet::new();
        for r in 3..=12 {
            for p in parabolic_indices(r).unwrap() {
                in_window.insert((p.i() as i64, p.j() as i64));
            }
        }
        for i in 0..40i64 {
            for j in 0..40i64 {
                let r = j - i;
                let listed = in_window.contains(&(i, j));
                if (3..=12).contains(&r) {
                    assert_eq!(is_parabolic(i, j), listed, "({i}, {j})");
                } else if r < 3 {
                    assert!(!is_parabolic(i, j), "({i}, {j})");
                }
            }
        }
    }

    #[test]
    fn parabolic_index_validation() {
        assert!(ParabolicIndex::new(2, 0).is_err());
        assert!(ParabolicIndex::new(3, 1).is_err());
        assert!(ParabolicIndex::new(5, 3).is_ok());
        assert!(ParabolicIndex::new(5, 4).is_err());
    }
}
