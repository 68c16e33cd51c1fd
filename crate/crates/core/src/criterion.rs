//! Arithmetic criterion for a frieze with coefficients to occur as a
//! subpolygon of some Conway–Coxeter frieze:
//!
//! 1. every triangle `(a, b, c)` has `gcd(a,b) = gcd(b,c) = gcd(a,c)`;
//! 2. for every prime `p < n`, no `(p+1)`-subpolygon has all its labels of
//!    one common positive `p`-valuation.
//!
//! Failing checks come with the lexicographically smallest witness.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{pow, primes_below, valuation};
use crate::frieze::Frieze;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
}

/// A triangle whose three pairwise gcds are not all equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdWitness {
    /// `(i, j, k)` with `i < j < k`.
    pub vertices: (usize, usize, usize),
    /// `(gcd(c_ij, c_jk), gcd(c_jk, c_ik), gcd(c_ij, c_ik))`.
    pub gcds: (BigUint, BigUint, BigUint),
}

/// A `(p+1)`-subpolygon all of whose labels have `p`-valuation exactly `m ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationWitness {
    pub p: u64,
    pub vertices: Vec<usize>,
    pub m: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub gcd_ok: bool,
    pub valuation_ok: bool,
    pub gcd_witness: Option<GcdWitness>,
    pub valuation_witness: Option<ValuationWitness>,
}

impl CriterionReport {
    pub fn embeddable(&self) -> bool {
        self.gcd_ok && self.valuation_ok
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}",
            if self.embeddable() { "embeddable" } else { "not embeddable" }
        )?;
        match &self.gcd_witness {
            None => writeln!(f, "gcd condition: ok")?,
            Some(w) => writeln!(
                f,
                "gcd condition: fails on triangle {:?} with gcds ({}, {}, {})",
                w.vertices, w.gcds.0, w.gcds.1, w.gcds.2
            )?,
        }
        match &self.valuation_witness {
            None => write!(f, "valuation condition: ok"),
            Some(w) => write!(
                f,
                "valuation condition: fails for p={} on vertices {:?} (common valuation m={})",
                w.p, w.vertices, w.m
            ),
        }
    }
}

fn triangle_gcds(a: &BigUint, b: &BigUint, c: &BigUint) -> (BigUint, BigUint, BigUint) {
    (a.gcd(b), b.gcd(c), a.gcd(c))
}

fn gcds_equal(g: &(BigUint, BigUint, BigUint)) -> bool {
    g.0 == g.1 && g.1 == g.2
}

pub(crate) fn gcd_violation(f: &Frieze) -> Option<GcdWitness> {
    let n = f.n();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let gcds = triangle_gcds(f.label(i, j), f.label(j, k), f.label(i, k));
                if !gcds_equal(&gcds) {
                    return Some(GcdWitness {
                        vertices: (i, j, k),
                        gcds,
                    });
                }
            }
        }
    }
    None
}

/// Condition (1) over all triangles.
pub fn check_gcd_condition(f: &Frieze) -> (bool, Option<GcdWitness>) {
    let w = gcd_violation(f);
    (w.is_none(), w)
}

/// Smallest `(p+1)`-subset with a common positive `p`-valuation, for a
/// single prime `p`. Does not require `p < n`; sizes above `n` find nothing.
pub fn valuation_violation_for_prime(f: &Frieze, p: u64) -> Option<ValuationWitness> {
    let n = f.n();
    let size = p as usize + 1;
    if size > n {
        return None;
    }
    let pb = BigUint::from(p);
    let mut val = vec![vec![0u32; n]; n];
    let mut any = false;
    for (i, j, c) in f.pairs() {
        let v = valuation(c, &pb);
        any |= v > 0;
        val[i][j] = v;
        val[j][i] = v;
    }
    if !any {
        return None;
    }
    // a violating set is a clique in the p-divisibility graph
    let candidates: Vec<usize> = (0..n)
        .filter(|&v| (0..n).filter(|&w| w != v && val[v][w] > 0).count() >= size - 1)
        .collect();
    let mut chosen = Vec::with_capacity(size);
    for (ai, &a) in candidates.iter().enumerate() {
        for (bi, &b) in candidates.iter().enumerate().skip(ai + 1) {
            let m = val[a][b];
            if m == 0 {
                continue;
            }
            chosen.clear();
            chosen.push(a);
            chosen.push(b);
            if extend_clique(&val, &candidates[bi + 1..], m, size, &mut chosen) {
                return Some(ValuationWitness {
                    p,
                    vertices: chosen,
                    m,
                });
            }
        }
    }
    None
}

/// Depth-first, lexicographic extension of `chosen` by vertices from `rest`
/// keeping every pair at valuation `m`.
fn extend_clique(
    val: &[Vec<u32>],
    rest: &[usize],
    m: u32,
    size: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == size {
        return true;
    }
    if chosen.len() + rest.len() < size {
        return false;
    }
    for (k, &v) in rest.iter().enumerate() {
        if chosen.iter().all(|&u| val[u][v] == m) {
            chosen.push(v);
            if extend_clique(val, &rest[k + 1..], m, size, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub(crate) fn valuation_violation(f: &Frieze) -> Option<ValuationWitness> {
    primes_below(f.n())
        .into_iter()
        .find_map(|p| valuation_violation_for_prime(f, p as u64))
}

/// Condition (2) over all primes `p < n`.
pub fn check_valuation_condition(f: &Frieze) -> (bool, Option<ValuationWitness>) {
    let w = valuation_violation(f);
    (w.is_none(), w)
}

pub fn is_embeddable(f: &Frieze) -> CriterionReport {
    let gcd_witness = gcd_violation(f);
    let valuation_witness = valuation_violation(f);
    CriterionReport {
        gcd_ok: gcd_witness.is_none(),
        valuation_ok: valuation_witness.is_none(),
        gcd_witness,
        valuation_witness,
    }
}

/// The triangle case: `gcd(a,b) = gcd(b,c) = gcd(a,c)` and the 2-valuations
/// are either all zero or not all equal.
pub fn check_triangle_criterion(a: &BigUint, b: &BigUint, c: &BigUint) -> bool {
    assert!(!a.is_zero() && !b.is_zero() && !c.is_zero(), "labels must be positive");
    if !gcds_equal(&triangle_gcds(a, b, c)) {
        return false;
    }
    let two = BigUint::from(2u32);
    let (va, vb, vc) = (valuation(a, &two), valuation(b, &two), valuation(c, &two));
    let all_zero = va == 0 && vb == 0 && vc == 0;
    let distinct = !(va == vb && vb == vc);
    all_zero || distinct
}

/// Given a `(p+1)`-subset `s` with uniform `p`-valuation `m` in a frieze
/// satisfying the gcd condition, report `m` and whether `p^m` divides every
/// label of `f`. On conforming input the flag is always `true`.
pub fn pm_divisibility(f: &Frieze, p: u64, s: &[usize]) -> Result<(u32, bool), CriterionError> {
    let pb = BigUint::from(p);
    if p < 2 || crate::arith::prime_divisors(&pb) != vec![pb.clone()] {
        return Err(CriterionError::PreconditionUnmet(format!("{p} is not prime")));
    }
    if s.len() != p as usize + 1 {
        return Err(CriterionError::PreconditionUnmet(format!(
            "vertex set must have {} elements, got {}",
            p + 1,
            s.len()
        )));
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.iter().any(|&v| v >= f.n()) {
        return Err(CriterionError::PreconditionUnmet(
            "vertex set must be distinct vertices of the polygon".into(),
        ));
    }
    if let Some(w) = gcd_violation(f) {
        return Err(CriterionError::PreconditionUnmet(format!(
            "gcd condition fails on triangle {:?}",
            w.vertices
        )));
    }
    let mut m = None;
    for (a, &u) in sorted.iter().enumerate() {
        for &v in &sorted[a + 1..] {
            let val = valuation(f.label(u, v), &pb);
            match m {
                None => m = Some(val),
                Some(prev) if prev != val => {
                    return Err(CriterionError::PreconditionUnmet(format!(
                        "labels in the vertex set have different {p}-valuations"
                    )))
                }
                _ => {}
            }
        }
    }
    let m = m.expect("at least one pair");
    let pm = pow(&pb, m);
    let ok = pm.is_one() || f.pairs().all(|(_, _, c)| (c % &pm).is_zero());
    Ok((m, ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::fixtures::{square_12, square_3};
    use crate::triangulation::{fan, frieze_of};

    fn b(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn gcd_condition_examples() {
        assert_eq!(check_gcd_condition(&square_3()), (true, None));
        assert_eq!(check_gcd_condition(&square_12()), (true, None));
        let (ok, w) = check_gcd_condition(&Frieze::triangle(2, 3, 4).unwrap());
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.vertices, (0, 1, 2));
        assert_eq!(w.gcds, (b(1), b(1), b(2)));
    }

    #[test]
    fn valuation_condition_examples() {
        let (ok, w) = check_valuation_condition(&square_3());
        assert!(!ok);
        assert_eq!(
            w,
            Some(ValuationWitness {
                p: 3,
                vertices: vec![0, 1, 2, 3],
                m: 1
            })
        );
        assert_eq!(check_valuation_condition(&square_12()), (true, None));
        let scaled = frieze_of(&fan(6, 0).unwrap()).unwrap().scale(&b(5)).unwrap();
        let (ok, w) = check_valuation_condition(&scaled);
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!((w.p, w.m), (5, 1));
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn embeddable_examples() {
        assert!(is_embeddable(&square_12()).embeddable());
        let r = is_embeddable(&square_3());
        assert!(!r.embeddable());
        assert!(r.gcd_ok);
        assert!(r.valuation_witness.is_some());
        assert!(is_embeddable(&Frieze::triangle(1, 1, 1).unwrap()).embeddable());
    }

    #[test]
    fn triangle_criterion_examples() {
        assert!(check_triangle_criterion(&b(1), &b(1), &b(1)));
        assert!(!check_triangle_criterion(&b(2), &b(2), &b(2)));
        assert!(check_triangle_criterion(&b(3), &b(3), &b(6)));
        assert!(!check_triangle_criterion(&b(2), &b(3), &b(4)));
    }

    #[test]
    fn pm_divisibility_examples() {
        assert_eq!(pm_divisibility(&square_3(), 3, &[0, 1, 2, 3]), Ok((1, true)));
        let scaled = frieze_of(&fan(6, 0).unwrap()).unwrap().scale(&b(5)).unwrap();
        assert_eq!(pm_divisibility(&scaled, 5, &[0, 1, 2, 3, 4, 5]), Ok((1, true)));
        // Conway–Coxeter edges are 1, so a uniform valuation must be 0
        let cc = frieze_of(&fan(6, 0).unwrap()).unwrap();
        assert_eq!(pm_divisibility(&cc, 3, &[0, 1, 2, 3]), Ok((0, true)));
        assert_eq!(pm_divisibility(&cc, 2, &[0, 1, 2]), Ok((0, true)));
        assert!(pm_divisibility(&cc, 3, &[0, 1, 2, 5]).is_err());
    }

    #[test]
    fn pm_divisibility_preconditions() {
        assert!(pm_divisibility(&square_3(), 4, &[0, 1, 2, 3, 0]).is_err());
        assert!(pm_divisibility(&square_3(), 3, &[0, 1, 2]).is_err());
        assert!(pm_divisibility(&square_3(), 2, &[0, 1, 3]).is_err());
        assert!(pm_divisibility(&Frieze::triangle(2, 3, 4).unwrap(), 2, &[0, 1, 2]).is_err());
    }
}
