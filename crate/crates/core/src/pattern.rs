//! Finite windows of the infinite frieze-pattern array.
//!
//! Row `i` of the pattern of an `N`-gon frieze holds `c(i,j)` for
//! `i ≤ j ≤ i + N`, with zeros at both ends. Indices are unbounded
//! integers; the polygon labels determine every entry through the glide
//! rule `c(i,j) = c(j, i+N)`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::frieze::Frieze;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WindowError {
    #[error("window has {0} rows; a 3x3 minor needs at least 3")]
    WindowTooSmall(usize),
    #[error("malformed window: {0}")]
    BadShape(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWindow {
    polygon_size: usize,
    first_row: i64,
    /// `rows[r][k] = c(first_row + r, first_row + r + k)`, `k = 0..=N`.
    rows: Vec<Vec<BigUint>>,
    /// `edges[k] = c(k, k+1)` for `k = 0..N`.
    edges: Vec<BigUint>,
}

impl PatternWindow {
    pub(crate) fn from_frieze(f: &Frieze, first_row: i64, row_count: usize) -> Self {
        let n = f.n();
        let size = n as i64;
        let rows = (0..row_count as i64)
            .map(|r| {
                let i = first_row + r;
                (0..=size)
                    .map(|k| {
                        if k == 0 || k == size {
                            BigUint::zero()
                        } else {
                            glide_reduce(f, i, i + k)
                        }
                    })
                    .collect()
            })
            .collect();
        let edges = (0..n).map(|k| f.boundary_label(k).clone()).collect();
        Self {
            polygon_size: n,
            first_row,
            rows,
            edges,
        }
    }

    /// A hand-built window. Every row must have `polygon_size + 1` entries.
    pub fn from_rows(
        polygon_size: usize,
        first_row: i64,
        rows: Vec<Vec<BigUint>>,
        edges: Vec<BigUint>,
    ) -> Result<Self, WindowError> {
        if polygon_size < 3 {
            return Err(WindowError::BadShape("polygon size below 3".into()));
        }
        if edges.len() != polygon_size {
            return Err(WindowError::BadShape(format!(
                "expected {polygon_size} edge labels, got {}",
                edges.len()
            )));
        }
        if let Some(r) = rows.iter().position(|r| r.len() != polygon_size + 1) {
            return Err(WindowError::BadShape(format!(
                "row {r} must have {} entries",
                polygon_size + 1
            )));
        }
        Ok(Self {
            polygon_size,
            first_row,
            rows,
            edges,
        })
    }

    pub fn polygon_size(&self) -> usize {
        self.polygon_size
    }

    pub fn first_row(&self) -> i64 {
        self.first_row
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Materialized entry `c(i, j)`, if inside the window.
    pub fn get(&self, i: i64, j: i64) -> Option<&BigUint> {
        let r = i - self.first_row;
        let k = j - i;
        if r < 0 || r as usize >= self.rows.len() || k < 0 || k > self.polygon_size as i64 {
            return None;
        }
        Some(&self.rows[r as usize][k as usize])
    }

    fn edge(&self, i: i64) -> &BigUint {
        &self.edges[i.rem_euclid(self.polygon_size as i64) as usize]
    }

    fn row_indices(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.rows.len() as i64).map(move |r| self.first_row + r)
    }

    /// `c(i,j) = c(j, i+N)` wherever both sides are materialized.
    pub fn check_glide(&self) -> bool {
        let size = self.polygon_size as i64;
        self.row_indices().all(|i| {
            (i..=i + size).all(|j| match (self.get(i, j), self.get(j, i + size)) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            })
        })
    }

    /// Every complete adjacent 2x2 minor satisfies
    /// `c(i,j)c(i+1,j+1) - c(i,j+1)c(i+1,j) = c(i+1,i+N)·c(j,j+1)`.
    pub fn check_local_rule(&self) -> bool {
        let size = self.polygon_size as i64;
        self.row_indices()
            .filter(|&i| self.get(i + 1, i + 1).is_some())
            .all(|i| {
                ((i + 1)..(i + size)).all(|j| {
                    let lhs = minor2(
                        self.get(i, j).unwrap(),
                        self.get(i, j + 1).unwrap(),
                        self.get(i + 1, j).unwrap(),
                        self.get(i + 1, j + 1).unwrap(),
                    );
                    let rhs = BigInt::from(self.get(i + 1, i + size).unwrap() * self.edge(j));
                    lhs == rhs
                })
            })
    }

    /// True iff every complete adjacent 3x3 submatrix has determinant 0.
    /// A window without any complete 3x3 submatrix (a triangle's pattern)
    /// is vacuously tame once it has three rows.
    pub fn tame_check(&self) -> Result<bool, WindowError> {
        if self.rows.len() < 3 {
            return Err(WindowError::WindowTooSmall(self.rows.len()));
        }
        let size = self.polygon_size as i64;
        let tame = self.row_indices().take(self.rows.len() - 2).all(|i| {
            ((i + 2)..=(i + size - 2)).all(|j| {
                let m: Vec<Vec<BigInt>> = (0..3)
                    .map(|r| {
                        (0..3)
                            .map(|c| BigInt::from(self.get(i + r, j + c).unwrap().clone()))
                            .collect()
                    })
                    .collect();
                det3(&m).is_zero()
            })
        });
        Ok(tame)
    }
}

/// Map a pattern index pair with `i < j < i + N` to its polygon label.
/// Two glide steps translate both indices by `N`, so reducing modulo `N`
/// lands in the fundamental domain.
fn glide_reduce(f: &Frieze, i: i64, j: i64) -> BigUint {
    let size = f.n() as i64;
    debug_assert!(i < j && j < i + size);
    let a = i.rem_euclid(size) as usize;
    let b = j.rem_euclid(size) as usize;
    f.label(a, b).clone()
}

fn minor2(a: &BigUint, b: &BigUint, c: &BigUint, d: &BigUint) -> BigInt {
    BigInt::from(a * d) - BigInt::from(b * c)
}

fn det3(m: &[Vec<BigInt>]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}
