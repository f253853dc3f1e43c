//! Reduced simplicial homology over prime fields.
//!
//! Everything here reduces to ranks of boundary matrices. Over GF(2) the
//! rows are bit-packed and elimination works a word at a time; over odd
//! primes the rows are dense `u64` vectors with entries reduced mod p.
//! Either way, for the chain complex with `f_k` faces of size `k` (the
//! empty face included at `k = 0`),
//!
//! ```text
//! dim H~_{k-1} = f_k - rank ∂_k - rank ∂_{k+1},
//! ```
//!
//! where ∂_k maps size-`k` faces to size-`k-1` faces. The empty face makes
//! this the *reduced* theory: a single point has no homology at all, and
//! the empty complex `{∅}` has dim H~_{-1} = 1.

use std::collections::BTreeMap;

use crate::complex::{has_isolated_vertex_in, independent_set_levels, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A prime field GF(p), validated at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<FieldSpec> {
        if p < 2 || p > (1 << 31) {
            return Err(Error::InvalidInput(format!("field order {p} out of range")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("field order {p} is not prime")));
        }
        Ok(FieldSpec { p })
    }

    pub fn gf2() -> FieldSpec {
        FieldSpec { p: 2 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Nonzero reduced Betti numbers by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyProfile {
    dims: BTreeMap<i64, u64>,
}

impl HomologyProfile {
    pub fn dim(&self, degree: i64) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.is_empty()
    }

    /// Degrees with nonzero homology, ascending, with their dimensions.
    pub fn entries(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims.iter().map(|(&d, &v)| (d, v))
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.dims.keys().next_back().copied()
    }

    pub(crate) fn from_dims(pairs: Vec<(i64, u64)>) -> HomologyProfile {
        HomologyProfile {
            dims: pairs.into_iter().filter(|&(_, v)| v != 0).collect(),
        }
    }
}

impl std::fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "trivial");
        }
        let mut first = true;
        for (&d, &v) in &self.dims {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "H~{d} = {v}")?;
        }
        Ok(())
    }
}

/// Rank of the boundary map from `upper` (faces of size k) to `lower`
/// (faces of size k-1). The empty-face column is real: vertices map to the
/// empty face, giving ∂_1 rank 1 whenever there is a vertex.
fn boundary_rank(upper: &[u64], lower: &[u64], field: FieldSpec) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    if field.p == 2 {
        boundary_rank_gf2(upper, lower)
    } else {
        boundary_rank_gfp(upper, lower, field.p)
    }
}

fn column_of(lower: &[u64], sub: u64) -> usize {
    lower
        .binary_search(&sub)
        .expect("boundary of a face must be in the complex")
}

fn boundary_rank_gf2(upper: &[u64], lower: &[u64]) -> usize {
    let words = lower.len().div_ceil(64);
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for &face in upper {
        let mut row = vec![0u64; words];
        let mut rest = face;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let col = column_of(lower, face & !(1u64 << v));
            row[col / 64] ^= 1u64 << (col % 64);
        }
        for (b, &p) in basis.iter().zip(&pivots) {
            if row[p / 64] >> (p % 64) & 1 == 1 {
                for (r, w) in row.iter_mut().zip(b) {
                    *r ^= w;
                }
            }
        }
        if let Some(w) = row.iter().position(|&w| w != 0) {
            let p = w * 64 + row[w].trailing_zeros() as usize;
            basis.push(row);
            pivots.push(p);
            rank += 1;
        }
    }
    rank
}

fn boundary_rank_gfp(upper: &[u64], lower: &[u64], p: u64) -> usize {
    let width = lower.len();
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for &face in upper {
        let mut row = vec![0u64; width];
        let mut rest = face;
        let mut sign_odd = false;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let col = column_of(lower, face & !(1u64 << v));
            row[col] = if sign_odd { p - 1 } else { 1 };
            sign_odd = !sign_odd;
        }
        for (b, &piv) in basis.iter().zip(&pivots) {
            let c = row[piv];
            if c != 0 {
                // basis rows are normalized to pivot 1
                for (r, &w) in row.iter_mut().zip(b) {
                    *r = (*r + (p - c) * w) % p;
                }
            }
        }
        if let Some(piv) = row.iter().position(|&w| w != 0) {
            let inv = mod_inverse(row[piv], p);
            for w in row.iter_mut() {
                *w = *w * inv % p;
            }
            basis.push(row);
            pivots.push(piv);
            rank += 1;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p, with p prime and a != 0.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn profile_from_levels(levels: &[Vec<u64>], field: FieldSpec) -> HomologyProfile {
    if levels.is_empty() {
        return HomologyProfile::default();
    }
    let mut ranks = vec![0usize; levels.len() + 1];
    for k in 1..levels.len() {
        ranks[k] = boundary_rank(&levels[k], &levels[k - 1], field);
    }
    let mut dims = Vec::new();
    for (k, level) in levels.iter().enumerate() {
        let f = level.len();
        let h = f - ranks[k] - ranks[k + 1];
        dims.push((k as i64 - 1, h as u64));
    }
    HomologyProfile::from_dims(dims)
}

/// All reduced Betti numbers of the complex over the given field.
pub fn reduced_homology(c: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    let levels: Vec<Vec<u64>> = (0..c.size_levels())
        .map(|k| c.faces_of_size(k).to_vec())
        .collect();
    debug_assert!(c.is_closed());
    profile_from_levels(&levels, field)
}

/// dim H~_d of the complex, requiring only sizes d..d+2 to be present and
/// closed. Errors if the stored faces are not closed at those sizes.
pub fn homology_in_degree(c: &SimplicialComplex, d: i64, field: FieldSpec) -> Result<u64> {
    if d < -1 {
        return Ok(0);
    }
    let k = (d + 1) as usize;
    if !c.is_closed_at_sizes(k..=k + 1) {
        return Err(Error::InvalidInput(format!(
            "complex is not downward closed at face sizes {k}..={}",
            k + 1
        )));
    }
    let faces = c.faces_of_size(k);
    if faces.is_empty() {
        return Ok(0);
    }
    let rank_down = boundary_rank(faces, c.faces_of_size(k.wrapping_sub(1)), field);
    let rank_down = if k == 0 { 0 } else { rank_down };
    let rank_up = boundary_rank(c.faces_of_size(k + 1), faces, field);
    Ok((faces.len() - rank_down - rank_up) as u64)
}

/// Full homology profile of the independence complex of `g[mask]`.
pub(crate) fn ind_profile_masked(g: &Graph, mask: u64, field: FieldSpec) -> HomologyProfile {
    if mask == 0 {
        return HomologyProfile::from_dims(vec![(-1, 1)]);
    }
    if has_isolated_vertex_in(g, mask) {
        // cone over the isolated vertex, contractible
        return HomologyProfile::default();
    }
    let levels = independent_set_levels(g, mask, mask.count_ones() as usize);
    profile_from_levels(&levels, field)
}

/// dim H~_d of the independence complex of `g[mask]`.
pub(crate) fn ind_homology_masked(g: &Graph, mask: u64, d: i64, field: FieldSpec) -> u64 {
    if mask == 0 {
        return u64::from(d == -1);
    }
    if d < 0 {
        return 0;
    }
    if has_isolated_vertex_in(g, mask) {
        return 0;
    }
    let k = (d + 1) as usize;
    let levels = independent_set_levels(g, mask, k + 1);
    if levels.len() <= k || levels[k].is_empty() {
        return 0;
    }
    let rank_down = boundary_rank(&levels[k], &levels[k - 1], field);
    let rank_up = if levels.len() > k + 1 {
        boundary_rank(&levels[k + 1], &levels[k], field)
    } else {
        0
    };
    (levels[k].len() - rank_down - rank_up) as u64
}

/// Homology profile of the independence complex of the whole graph.
pub fn independence_homology(g: &Graph, field: FieldSpec) -> HomologyProfile {
    ind_profile_masked(g, g.vertex_set().bits(), field)
}
