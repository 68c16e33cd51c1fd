//! Triangulations of convex polygons and the Conway–Coxeter bijection.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::frieze::Frieze;

/// Largest polygon size [`enumerate_triangulations`] accepts by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("({0}, {1}) is not a diagonal")]
    BadDiagonal(usize, usize),
    #[error("expected {expected} diagonals, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("diagonals {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
    #[error("polygon size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("apex {apex} is not a vertex of the {n}-gon")]
    BadApex { n: usize, apex: usize },
    #[error("frieze is not Conway-Coxeter")]
    NotConwayCoxeter,
    #[error("label-1 diagonals do not form a triangulation: {0}")]
    NotATriangulation(Box<TriangulationError>),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// `true` if the chords `{a,b}` and `{c,d}` (each with smaller end first)
/// cross in the interior of the polygon.
pub fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// A maximal set of pairwise non-crossing diagonals of a convex `n`-gon.
/// Diagonals are stored as `(i, j)` with `i < j`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

impl Triangulation {
    pub fn new(n: usize, diagonals: Vec<(usize, usize)>) -> Result<Self, TriangulationError> {
        if n < 3 {
            return Err(TriangulationError::TooFewVertices(n));
        }
        let mut diags: Vec<(usize, usize)> = diagonals
            .into_iter()
            .map(|(i, j)| if i < j { (i, j) } else { (j, i) })
            .collect();
        for &(i, j) in &diags {
            if j >= n || j - i <= 1 || j - i == n - 1 {
                return Err(TriangulationError::BadDiagonal(i, j));
            }
        }
        diags.sort_unstable();
        if let Some(w) = diags.windows(2).find(|w| w[0] == w[1]) {
            return Err(TriangulationError::BadDiagonal(w[0].0, w[0].1));
        }
        if diags.len() != n - 3 {
            return Err(TriangulationError::WrongCount {
                expected: n - 3,
                got: diags.len(),
            });
        }
        for (k, &d) in diags.iter().enumerate() {
            if let Some(&e) = diags[k + 1..].iter().find(|&&e| crosses(d, e)) {
                return Err(TriangulationError::Crossing(d, e));
            }
        }
        Ok(Self { n, diagonals: diags })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.diagonals.binary_search(&key).is_ok()
    }

    /// Number of triangles incident to each vertex.
    pub fn quiddity(&self) -> Quiddity {
        let mut counts = vec![1usize; self.n];
        for &(i, j) in &self.diagonals {
            counts[i] += 1;
            counts[j] += 1;
        }
        Quiddity { counts }
    }

    /// The Conway–Coxeter frieze of this triangulation.
    ///
    /// Labels come from the quiddity recurrence
    /// `c(i,j+1) = q_j·c(i,j) - c(i,j-1)` with `c(i,i) = 0`, `c(i,i+1) = 1`,
    /// followed by full Ptolemy validation.
    pub fn frieze(&self) -> Result<Frieze, TriangulationError> {
        let n = self.n;
        let q = self.quiddity().counts;
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n - 1);
        for i in 0..n {
            let mut prev = BigInt::from(0);
            let mut cur = BigInt::one();
            let mut row = Vec::with_capacity(n - 1 - i);
            for s in 1..n {
                if i + s < n {
                    let v = cur.to_biguint().filter(|v| v >= &BigUint::one()).ok_or_else(|| {
                        TriangulationError::InternalInconsistency(format!(
                            "non-positive label c({i},{}) = {cur}",
                            i + s
                        ))
                    })?;
                    row.push(v);
                }
                let next = BigInt::from(q[(i + s) % n]) * &cur - &prev;
                prev = cur;
                cur = next;
            }
            // after a full turn the recurrence must close with c(i,i+n-1) = 1, c(i,i+n) = 0
            if !prev.is_one() || !cur.is_zero() {
                return Err(TriangulationError::InternalInconsistency(format!(
                    "recurrence from vertex {i} does not close"
                )));
            }
            if i + 1 < n {
                rows.push(row);
            }
        }
        Frieze::new(n, rows).map_err(|e| TriangulationError::InternalInconsistency(e.to_string()))
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .diagonals
            .iter()
            .map(|(i, j)| format!("{{{i},{j}}}"))
            .collect();
        write!(f, "{}-gon [{}]", self.n, parts.join(", "))
    }
}

/// Per-vertex triangle counts of a triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiddity {
    pub counts: Vec<usize>,
}

impl Quiddity {
    pub fn sum(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Fan triangulation: every diagonal starts at `apex`.
pub fn fan(n: usize, apex: usize) -> Result<Triangulation, TriangulationError> {
    if n < 3 {
        return Err(TriangulationError::TooFewVertices(n));
    }
    if apex >= n {
        return Err(TriangulationError::BadApex { n, apex });
    }
    let diags = (0..n)
        .filter(|&j| j != apex && j != (apex + 1) % n && j != (apex + n - 1) % n)
        .map(|j| (apex.min(j), apex.max(j)))
        .collect();
    Triangulation::new(n, diags)
}

pub fn quiddity(t: &Triangulation) -> Quiddity {
    t.quiddity()
}

pub fn frieze_of(t: &Triangulation) -> Result<Frieze, TriangulationError> {
    t.frieze()
}

/// Recover the triangulation of a Conway–Coxeter frieze from its label-1
/// diagonals.
pub fn triangulation_of(f: &Frieze) -> Result<Triangulation, TriangulationError> {
    if !f.is_conway_coxeter() {
        return Err(TriangulationError::NotConwayCoxeter);
    }
    let n = f.n();
    let diags = f
        .pairs()
        .filter(|&(i, j, v)| j - i > 1 && j - i < n - 1 && v.is_one())
        .map(|(i, j, _)| (i, j))
        .collect();
    Triangulation::new(n, diags).map_err(|e| TriangulationError::NotATriangulation(Box::new(e)))
}

/// All triangulations of the `n`-gon in lexicographic order of their
/// sorted diagonal lists. `n` is limited by [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_triangulations(
    n: usize,
) -> Result<std::vec::IntoIter<Triangulation>, TriangulationError> {
    enumerate_triangulations_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_triangulations_capped(
    n: usize,
    cap: usize,
) -> Result<std::vec::IntoIter<Triangulation>, TriangulationError> {
    if n < 3 {
        return Err(TriangulationError::TooFewVertices(n));
    }
    if n > cap {
        return Err(TriangulationError::CapExceeded { n, cap });
    }
    let vertices: Vec<usize> = (0..n).collect();
    let mut all: Vec<Vec<(usize, usize)>> = triangulate(&vertices);
    for d in &mut all {
        d.sort_unstable();
    }
    all.sort_unstable();
    let out: Vec<Triangulation> = all
        .into_iter()
        .map(|diagonals| Triangulation { n, diagonals })
        .collect();
    Ok(out.into_iter())
}

/// Diagonal sets of all triangulations of the convex polygon on `vs`
/// (an increasing vertex list); the chord `vs[0]–vs[last]` is treated as a
/// side and is never emitted.
fn triangulate(vs: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if vs.len() < 3 {
        return vec![Vec::new()];
    }
    let last = vs.len() - 1;
    let mut out = Vec::new();
    for k in 1..last {
        let left = triangulate(&vs[..=k]);
        let right = triangulate(&vs[k..]);
        for l in &left {
            for r in &right {
                let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                d.extend_from_slice(l);
                d.extend_from_slice(r);
                if k > 1 {
                    d.push((vs[0], vs[k]));
                }
                if k < last - 1 {
                    d.push((vs[k], vs[last]));
                }
                out.push(d);
            }
        }
    }
    out
}
