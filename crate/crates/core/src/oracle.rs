//! Brute-force ground truth: search every Conway–Coxeter frieze up to a
//! size cap for an occurrence of a query frieze as a subpolygon.

use rayon::prelude::*;
use thiserror::Error;

use crate::criterion::is_embeddable;
use crate::frieze::Frieze;
use crate::triangulation::{enumerate_triangulations_capped, frieze_of, Triangulation};

/// Default ceiling on the polygon size the oracle scans.
pub const DEFAULT_ORACLE_CAP: usize = 12;
/// Ceiling on `cross_validate`'s exhaustive sweep.
pub const CROSS_VALIDATE_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("size {n_max} exceeds the cap {cap}")]
    CapExceeded { n_max: usize, cap: usize },
    #[error("bad range: {0}")]
    BadRange(String),
}

/// Placement of the query's cyclic vertex order on the chosen subset:
/// subset position `i` carries query vertex `rotation + i` (or
/// `rotation - i` when reflected), modulo the query size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dihedral {
    pub rotation: usize,
    pub reflected: bool,
}

impl Dihedral {
    pub fn apply(&self, i: usize, k: usize) -> usize {
        if self.reflected {
            (self.rotation + k - i % k) % k
        } else {
            (self.rotation + i) % k
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceWitness {
    pub n_cc: usize,
    pub tri: Triangulation,
    pub vertex_subset: Vec<usize>,
    pub transform: Dihedral,
}

impl OccurrenceWitness {
    /// Recompute the restriction and compare with the query label by label.
    pub fn verify(&self, query: &Frieze) -> bool {
        let k = query.n();
        if self.vertex_subset.len() != k || self.tri.n() != self.n_cc {
            return false;
        }
        let Ok(cc) = frieze_of(&self.tri) else {
            return false;
        };
        let Ok(sub) = cc.restrict(&self.vertex_subset) else {
            return false;
        };
        placement_matches(&sub, query, self.transform)
    }
}

fn placement_matches(sub: &Frieze, query: &Frieze, t: Dihedral) -> bool {
    let k = query.n();
    (0..k).all(|i| {
        ((i + 1)..k).all(|j| sub.label(i, j) == query.label(t.apply(i, k), t.apply(j, k)))
    })
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            cur: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let k = out.len();
        let cur = self.cur.as_mut().expect("checked");
        let mut i = k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for t in i + 1..k {
                    cur[t] = cur[t - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

fn sorted_labels(f: &Frieze) -> Vec<num_bigint::BigUint> {
    let mut v: Vec<_> = f.pairs().map(|(_, _, c)| c.clone()).collect();
    v.sort_unstable();
    v
}

fn search_triangulation(t: &Triangulation, query: &Frieze, key: &[num_bigint::BigUint]) -> Option<OccurrenceWitness> {
    let cc = frieze_of(t).expect("triangulations yield valid friezes");
    let k = query.n();
    for subset in Combinations::new(t.n(), k) {
        let sub = cc.restrict_unchecked(&subset);
        if sorted_labels(&sub) != key {
            continue;
        }
        for reflected in [false, true] {
            for rotation in 0..k {
                let transform = Dihedral { rotation, reflected };
                if placement_matches(&sub, query, transform) {
                    return Some(OccurrenceWitness {
                        n_cc: t.n(),
                        tri: t.clone(),
                        vertex_subset: subset,
                        transform,
                    });
                }
            }
        }
    }
    None
}

/// First occurrence of `f` in a Conway–Coxeter frieze on at most `n_max`
/// vertices, scanning polygon sizes upward and triangulations in canonical
/// order. `n_max` is limited by [`DEFAULT_ORACLE_CAP`].
pub fn occurs_in_cc(f: &Frieze, n_max: usize) -> Result<Option<OccurrenceWitness>, OracleError> {
    occurs_in_cc_capped(f, n_max, DEFAULT_ORACLE_CAP)
}

pub fn occurs_in_cc_capped(
    f: &Frieze,
    n_max: usize,
    cap: usize,
) -> Result<Option<OccurrenceWitness>, OracleError> {
    if n_max > cap {
        return Err(OracleError::CapExceeded { n_max, cap });
    }
    if n_max < f.n() {
        return Err(OracleError::BadRange(format!(
            "size cap {n_max} is below the query size {}",
            f.n()
        )));
    }
    let key = sorted_labels(f);
    for n in f.n()..=n_max {
        let tris: Vec<Triangulation> = enumerate_triangulations_capped(n, cap)
            .map_err(|_| OracleError::CapExceeded { n_max, cap })?
            .collect();
        // find_map_first keeps the canonical (sequential) winner
        if let Some(w) = tris.par_iter().find_map_first(|t| search_triangulation(t, f, &key)) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    /// A subpolygon of a Conway–Coxeter frieze fails the criterion.
    NecessityViolated { tri: Triangulation, subset: Vec<usize> },
    /// A corpus frieze that fails the criterion was found anyway.
    UnexpectedOccurrence { index: usize, witness: OccurrenceWitness },
    /// A corpus frieze unexpectedly satisfies the criterion.
    CorpusPassesCriterion { index: usize },
}

/// Check the criterion against exhaustion: every subpolygon (sizes
/// `3..=k_max`) of every Conway–Coxeter frieze with at most `n_max`
/// vertices must pass, and no frieze of `corpus` (all failing the
/// criterion) may occur up to `n_max`. Returns all mismatches.
pub fn cross_validate(n_max: usize, k_max: usize, corpus: &[Frieze]) -> Result<Vec<Mismatch>, OracleError> {
    if n_max > CROSS_VALIDATE_CAP {
        return Err(OracleError::CapExceeded {
            n_max,
            cap: CROSS_VALIDATE_CAP,
        });
    }
    if k_max < 3 || k_max > n_max {
        return Err(OracleError::BadRange(format!(
            "subpolygon size cap {k_max} must lie in 3..={n_max}"
        )));
    }
    let mut mismatches = Vec::new();
    for n in 3..=n_max {
        let tris: Vec<Triangulation> = enumerate_triangulations_capped(n, CROSS_VALIDATE_CAP)
            .expect("within cap")
            .collect();
        let found: Vec<Vec<Mismatch>> = tris
            .par_iter()
            .map(|t| {
                let cc = frieze_of(t).expect("valid triangulation");
                let mut out = Vec::new();
                for k in 3..=k_max.min(n) {
                    for subset in Combinations::new(n, k) {
                        if !is_embeddable(&cc.restrict_unchecked(&subset)).embeddable() {
                            out.push(Mismatch::NecessityViolated {
                                tri: t.clone(),
                                subset,
                            });
                        }
                    }
                }
                out
            })
            .collect();
        mismatches.extend(found.into_iter().flatten());
    }
    for (index, f) in corpus.iter().enumerate() {
        if is_embeddable(f).embeddable() {
            mismatches.push(Mismatch::CorpusPassesCriterion { index });
        }
        if f.n() <= n_max {
            if let Some(witness) = occurs_in_cc_capped(f, n_max, CROSS_VALIDATE_CAP)? {
                mismatches.push(Mismatch::UnexpectedOccurrence { index, witness });
            }
        }
    }
    Ok(mismatches)
}
