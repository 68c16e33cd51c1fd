//! Friezes with coefficients on convex polygons.
//!
//! A frieze on an `n`-gon assigns a positive integer to every edge and
//! diagonal `{i, j}` such that every Ptolemy relation
//! `c(i,k)·c(j,l) = c(i,l)·c(j,k) + c(i,j)·c(k,l)` holds for `i < j < k < l`.
//! Vertices are `0..n` in counterclockwise order; `c(i,i) = 0` is implicit.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::pattern::{PatternWindow, WindowError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("label c({i},{j}) must be positive")]
    NonPositiveLabel { i: usize, j: usize },
    #[error("Ptolemy relation fails at ({}, {}, {}, {}): {lhs} != {rhs}", .quad.0, .quad.1, .quad.2, .quad.3)]
    PtolemyViolation {
        quad: (usize, usize, usize, usize),
        lhs: BigUint,
        rhs: BigUint,
    },
    #[error("bad vertex subset: {0}")]
    BadSubset(String),
    #[error("scale factor must be positive")]
    NonPositiveScalar,
}

#[inline]
fn packed_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// A complete table of positive labels on an `n`-gon that has not (yet)
/// been checked against the Ptolemy relations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelTable {
    n: usize,
    labels: Vec<BigUint>,
}

impl LabelTable {
    /// Build from the triangular row layout: row `i` holds
    /// `c(i,i+1), …, c(i,n-1)`.
    pub fn from_rows(n: usize, rows: Vec<Vec<BigUint>>) -> Result<Self, FriezeError> {
        if n < 3 {
            return Err(FriezeError::BadShape(format!("need at least 3 vertices, got {n}")));
        }
        if rows.len() != n - 1 {
            return Err(FriezeError::BadShape(format!(
                "expected {} rows, got {}",
                n - 1,
                rows.len()
            )));
        }
        let mut labels = Vec::with_capacity(n * (n - 1) / 2);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n - 1 - i {
                return Err(FriezeError::BadShape(format!(
                    "row {i} should have {} entries, got {}",
                    n - 1 - i,
                    row.len()
                )));
            }
            for (k, v) in row.into_iter().enumerate() {
                if v.is_zero() {
                    return Err(FriezeError::NonPositiveLabel { i, j: i + 1 + k });
                }
                labels.push(v);
            }
        }
        Ok(Self { n, labels })
    }

    /// Build by evaluating `label(i, j)` for every `i < j`.
    pub fn from_fn<F>(n: usize, mut label: F) -> Result<Self, FriezeError>
    where
        F: FnMut(usize, usize) -> BigUint,
    {
        let rows = (0..n.saturating_sub(1))
            .map(|i| ((i + 1)..n).map(|j| label(i, j)).collect())
            .collect();
        Self::from_rows(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Label of the pair `{i, j}`; `i != j`, order irrelevant.
    pub fn label(&self, i: usize, j: usize) -> &BigUint {
        assert!(i != j && i < self.n && j < self.n, "no label for ({i}, {j})");
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        &self.labels[packed_index(self.n, a, b)]
    }

    /// Triangular rows, the inverse of [`LabelTable::from_rows`].
    pub fn rows(&self) -> Vec<Vec<BigUint>> {
        (0..self.n - 1)
            .map(|i| ((i + 1)..self.n).map(|j| self.label(i, j).clone()).collect())
            .collect()
    }

    /// Check all `C(n,4)` Ptolemy relations exactly.
    pub fn verify_ptolemy(&self) -> ValidationReport {
        let n = self.n;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    for l in (k + 1)..n {
                        let lhs = self.label(i, k) * self.label(j, l);
                        let rhs = self.label(i, l) * self.label(j, k)
                            + self.label(i, j) * self.label(k, l);
                        if lhs != rhs {
                            violations.push(PtolemyViolation {
                                quad: (i, j, k, l),
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtolemyViolation {
    pub quad: (usize, usize, usize, usize),
    pub lhs: BigUint,
    pub rhs: BigUint,
}

/// Outcome of [`LabelTable::verify_ptolemy`]. Violations are in
/// lexicographic order of their quadruples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<PtolemyViolation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check an unvalidated table against every Ptolemy relation.
pub fn verify_ptolemy(table: &LabelTable) -> ValidationReport {
    table.verify_ptolemy()
}

/// A validated frieze with coefficients over the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frieze {
    table: LabelTable,
}

impl TryFrom<LabelTable> for Frieze {
    type Error = FriezeError;

    fn try_from(table: LabelTable) -> Result<Self, FriezeError> {
        let report = table.verify_ptolemy();
        if let Some(v) = report.violations.into_iter().next() {
            return Err(FriezeError::PtolemyViolation {
                quad: v.quad,
                lhs: v.lhs,
                rhs: v.rhs,
            });
        }
        Ok(Self { table })
    }
}

impl Frieze {
    /// Validate a triangular table (row `i` = `c(i,i+1), …, c(i,n-1)`).
    pub fn new(n: usize, rows: Vec<Vec<BigUint>>) -> Result<Self, FriezeError> {
        LabelTable::from_rows(n, rows)?.try_into()
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64_rows(n: usize, rows: &[&[u64]]) -> Result<Self, FriezeError> {
        Self::new(
            n,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigUint::from(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn<F>(n: usize, label: F) -> Result<Self, FriezeError>
    where
        F: FnMut(usize, usize) -> BigUint,
    {
        LabelTable::from_fn(n, label)?.try_into()
    }

    /// The triangle with `c(0,1) = a`, `c(1,2) = b`, `c(0,2) = c`.
    pub fn triangle(a: u64, b: u64, c: u64) -> Result<Self, FriezeError> {
        Self::from_u64_rows(3, &[&[a, c], &[b]])
    }

    pub fn n(&self) -> usize {
        self.table.n
    }

    pub fn label(&self, i: usize, j: usize) -> &BigUint {
        self.table.label(i, j)
    }

    /// `c(i,j)` with the implicit `c(i,i) = 0`.
    pub fn entry(&self, i: usize, j: usize) -> BigUint {
        if i == j {
            BigUint::zero()
        } else {
            self.label(i, j).clone()
        }
    }

    /// Label of the boundary edge `{a, a+1 mod n}`.
    pub fn boundary_label(&self, a: usize) -> &BigUint {
        self.label(a, (a + 1) % self.n())
    }

    pub fn table(&self) -> &LabelTable {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<BigUint>> {
        self.table.rows()
    }

    /// All pairs `(i, j, label)` with `i < j`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j, self.label(i, j))))
    }

    /// Restrict to the subpolygon on the strictly increasing vertex list `s`.
    pub fn restrict(&self, s: &[usize]) -> Result<Frieze, FriezeError> {
        if s.len() < 3 {
            return Err(FriezeError::BadSubset(format!(
                "need at least 3 vertices, got {}",
                s.len()
            )));
        }
        if let Some(&v) = s.iter().find(|&&v| v >= self.n()) {
            return Err(FriezeError::BadSubset(format!("vertex {v} out of range")));
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FriezeError::BadSubset(
                "vertices must be strictly increasing".into(),
            ));
        }
        Ok(self.restrict_unchecked(s))
    }

    /// Restriction without re-validation; Ptolemy relations are inherited.
    pub(crate) fn restrict_unchecked(&self, s: &[usize]) -> Frieze {
        let table = LabelTable::from_fn(s.len(), |a, b| self.label(s[a], s[b]).clone())
            .expect("restriction of a complete table is complete");
        Frieze { table }
    }

    /// Multiply every label by `k`.
    pub fn scale(&self, k: &BigUint) -> Result<Frieze, FriezeError> {
        if k.is_zero() {
            return Err(FriezeError::NonPositiveScalar);
        }
        let table = LabelTable::from_fn(self.n(), |i, j| self.label(i, j) * k)?;
        Ok(Frieze { table })
    }

    /// All boundary edges carry label 1.
    pub fn is_conway_coxeter(&self) -> bool {
        (0..self.n()).all(|a| self.boundary_label(a).is_one())
    }

    /// Rows `first_row .. first_row + row_count` of the infinite frieze
    /// pattern, obtained from the polygon labels through the glide rule.
    pub fn pattern_rows(&self, first_row: i64, row_count: usize) -> PatternWindow {
        PatternWindow::from_frieze(self, first_row, row_count)
    }

    /// Tameness of a window of this frieze's pattern.
    pub fn tame_check(&self, first_row: i64, row_count: usize) -> Result<bool, WindowError> {
        self.pattern_rows(first_row, row_count).tame_check()
    }
}

impl fmt::Display for Frieze {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", " ".repeat(i))?;
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
