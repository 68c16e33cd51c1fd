//! Constructive embedding of a frieze into a Conway–Coxeter frieze.
//!
//! One step glues a new vertex onto a boundary edge whose label `c0` is
//! larger than 1. The new edges get labels `1` and `y0` with `0 < y0 < c0`,
//! so repeating the step on every boundary edge terminates in a frieze
//! whose boundary is all ones.
//!
//! Within a step the polygon is read in a rotated frame in which the chosen
//! edge joins frame vertex `n-1` to frame vertex `0`; the new vertex sits
//! between them. With `c_j = c(j, n-1)`, the label `y0` is fixed prime by
//! prime: for each `p^ℓ ‖ c0` a vertex `i_p` of minimal `p`-valuation `m`
//! and a residue of `y_{i_p}` avoiding a sieve of forbidden classes mod `p`
//! determine `y0 mod p^ℓ`. CRT gives `y0 mod c0`, and then
//! `y_j = (c_j·y0 + c(0,j)) / c0`.
//!
//! The rotated frame never leaks out: edges and vertices in the public
//! types use the frieze's own indices.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{coprime_part, crt, mod_inverse, pow, prime_divisors, reduce, valuation};
use crate::criterion::{is_embeddable, CriterionReport};
use crate::frieze::Frieze;
use crate::triangulation::{triangulation_of, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("({0}, {1}) is not a boundary edge")]
    NotBoundaryEdge(usize, usize),
    #[error("edge ({0}, {1}) already has label 1")]
    EdgeLabelOne(usize, usize),
    #[error("every residue mod {p} is ruled out for every candidate vertex")]
    NoAdmissibleResidue { p: BigUint },
    #[error("input violates a precondition: {0}")]
    PreconditionViolated(String),
    #[error("invalid choice: {0}")]
    InvalidChoice(String),
    #[error("y_{j} is not integral")]
    NonIntegralY { j: usize },
    #[error("extended frieze failed validation: {0}")]
    PostconditionFailed(String),
    #[error("frieze is not embeddable")]
    NotEmbeddable(Box<CriterionReport>),
    #[error("no Conway-Coxeter frieze reached within {limit} steps")]
    StepLimitExceeded { limit: usize },
    #[error("limit must be at least 1")]
    ZeroLimit,
}

/// Sieve data for one candidate vertex `i_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IpCandidate {
    pub vertex: usize,
    /// Residues mod `p` ruled out for `y_{i_p}`; always contains 0.
    pub forbidden: BTreeSet<BigUint>,
    /// Set when `m = 0` and the sieve rules out every class for every
    /// candidate. With `m = 0` the residue of `y_0` mod `p^ℓ` does not
    /// depend on `y_{i_p}`, so the sieve is lifted and every nonzero
    /// residue is accepted.
    pub unrestricted: bool,
}

impl IpCandidate {
    pub fn is_admissible(&self, residue: &BigUint, p: &BigUint) -> bool {
        let r = residue % p;
        !r.is_zero() && (self.unrestricted || !self.forbidden.contains(&r))
    }

    /// Admissible residues mod `p` in increasing order.
    pub fn admissible_residues<'a>(&'a self, p: &'a BigUint) -> impl Iterator<Item = BigUint> + 'a {
        num_iter(BigUint::one(), p.clone()).filter(move |r| self.is_admissible(r, p))
    }

    pub fn has_admissible(&self, p: &BigUint) -> bool {
        self.unrestricted || BigUint::from(self.forbidden.len()) < *p
    }
}

fn num_iter(from: BigUint, to: BigUint) -> impl Iterator<Item = BigUint> {
    std::iter::successors(Some(from), |x| Some(x + 1u32)).take_while(move |x| x < &to)
}

/// Per-prime data of one extension step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeLocal {
    pub p: BigUint,
    /// `ν_p(c0)`.
    pub ell: u32,
    /// Minimal `p`-valuation of the labels `c_j` at the far end of the edge.
    pub m: u32,
    /// Vertices attaining `m`, ordered from the edge's right endpoint
    /// around the polygon.
    pub candidates: Vec<IpCandidate>,
    pub chosen_ip: Option<usize>,
    /// Residue of `y_{i_p}` modulo `p^ℓ`.
    pub chosen_residue: Option<BigUint>,
}

impl PrimeLocal {
    pub fn modulus(&self) -> BigUint {
        pow(&self.p, self.ell)
    }

    pub fn candidate(&self, vertex: usize) -> Option<&IpCandidate> {
        self.candidates.iter().find(|c| c.vertex == vertex)
    }

    /// Fix `i_p` and the residue of `y_{i_p}` mod `p^ℓ`.
    pub fn select(&mut self, ip: usize, residue: &BigUint) -> Result<(), ExtendError> {
        let cand = self.candidate(ip).ok_or_else(|| {
            ExtendError::InvalidChoice(format!(
                "vertex {ip} does not attain the minimal {}-valuation",
                self.p
            ))
        })?;
        if !cand.is_admissible(residue, &self.p) {
            return Err(ExtendError::InvalidChoice(format!(
                "residue {residue} is ruled out mod {} for vertex {ip}",
                self.p
            )));
        }
        self.chosen_residue = Some(residue % self.modulus());
        self.chosen_ip = Some(ip);
        Ok(())
    }

    /// Smallest candidate with an admissible residue, and its smallest
    /// admissible residue.
    pub fn select_smallest(&mut self) -> Result<(), ExtendError> {
        let (ip, r) = self
            .candidates
            .iter()
            .find_map(|c| c.admissible_residues(&self.p).next().map(|r| (c.vertex, r)))
            .ok_or_else(|| ExtendError::NoAdmissibleResidue { p: self.p.clone() })?;
        self.select(ip, &r)
    }
}

/// Where and how to extend: a boundary edge and one [`PrimeLocal`] per
/// prime divisor of its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionChoice {
    /// `(a, a+1 mod n)`.
    pub edge: (usize, usize),
    pub per_prime: Vec<PrimeLocal>,
}

impl ExtensionChoice {
    pub fn prime_mut(&mut self, p: &BigUint) -> Result<&mut PrimeLocal, ExtendError> {
        self.per_prime
            .iter_mut()
            .find(|l| &l.p == p)
            .ok_or_else(|| ExtendError::InvalidChoice(format!("{p} does not divide the edge label")))
    }

    pub fn select(&mut self, p: &BigUint, ip: usize, residue: &BigUint) -> Result<(), ExtendError> {
        self.prime_mut(p)?.select(ip, residue)
    }

    /// Fill every prime that has no selection yet with the smallest choice.
    pub fn select_remaining_smallest(&mut self) -> Result<(), ExtendError> {
        for local in &mut self.per_prime {
            if local.chosen_ip.is_none() {
                local.select_smallest()?;
            }
        }
        Ok(())
    }

    fn is_complete(&self) -> bool {
        self.per_prime
            .iter()
            .all(|l| l.chosen_ip.is_some() && l.chosen_residue.is_some())
    }
}

/// Record of one extension step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTrace {
    pub choice: ExtensionChoice,
    pub c0: BigUint,
    pub y0_mod_c0: BigUint,
    /// `y[j]` is the label between the new vertex and `frame[j]`.
    pub y: Vec<BigUint>,
    /// Vertices of the frieze before the step, in rotated order: `frame[0]`
    /// is the right endpoint of the edge, `frame[n-1]` the left one.
    pub frame: Vec<usize>,
    /// Index of the new vertex in the extended frieze.
    pub new_vertex: usize,
}

/// A Conway–Coxeter frieze containing the input as a subpolygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub input: Frieze,
    pub cc: Frieze,
    pub tri: Triangulation,
    /// `vertex_map[v]` is the vertex of `cc` carrying input vertex `v`.
    pub vertex_map: Vec<usize>,
    pub traces: Vec<ExtensionTrace>,
}

impl Embedding {
    /// Restriction along `vertex_map` reproduces the input, `cc` is
    /// Conway–Coxeter and `tri` is its triangulation.
    pub fn verify(&self) -> bool {
        let increasing = self.vertex_map.windows(2).all(|w| w[0] < w[1]);
        increasing
            && self.vertex_map.last().is_some_and(|&v| v < self.cc.n())
            && self.cc.is_conway_coxeter()
            && self.cc.restrict_unchecked(&self.vertex_map) == self.input
            && triangulation_of(&self.cc).as_ref() == Ok(&self.tri)
    }
}

/// The polygon read from the chosen edge: frame vertex `k` is original
/// vertex `(a + 1 + k) mod n`.
struct Frame<'a> {
    f: &'a Frieze,
    a: usize,
}

impl<'a> Frame<'a> {
    fn n(&self) -> usize {
        self.f.n()
    }

    fn original(&self, k: usize) -> usize {
        (self.a + 1 + k) % self.n()
    }

    fn position(&self, v: usize) -> usize {
        (v + self.n() - self.a - 1) % self.n()
    }

    /// `c(i, j)` in frame indices, zero on the diagonal.
    fn label(&self, i: usize, j: usize) -> BigUint {
        self.f.entry(self.original(i), self.original(j))
    }

    /// `c_j = c(j, n-1)`.
    fn c(&self, j: usize) -> BigUint {
        self.label(j, self.n() - 1)
    }
}

fn boundary_left(f: &Frieze, (u, v): (usize, usize)) -> Result<usize, ExtendError> {
    let n = f.n();
    if u < n && v < n {
        if (u + 1) % n == v {
            return Ok(u);
        }
        if (v + 1) % n == u {
            return Ok(v);
        }
    }
    Err(ExtendError::NotBoundaryEdge(u, v))
}

/// Per-prime sieve data for extending across `edge`, with nothing selected.
pub fn admissible_choices(f: &Frieze, edge: (usize, usize)) -> Result<ExtensionChoice, ExtendError> {
    let a = boundary_left(f, edge)?;
    let n = f.n();
    let edge = (a, (a + 1) % n);
    let c0 = f.boundary_label(a).clone();
    if c0.is_one() {
        return Err(ExtendError::EdgeLabelOne(edge.0, edge.1));
    }
    let frame = Frame { f, a };
    let cs: Vec<BigUint> = (0..n - 1).map(|j| frame.c(j)).collect();
    let mut per_prime = Vec::new();
    for p in prime_divisors(&c0) {
        let ell = valuation(&c0, &p);
        let vals: Vec<u32> = cs.iter().map(|c| valuation(c, &p)).collect();
        let m = *vals.iter().min().expect("n >= 3");
        let pm = pow(&p, m);
        let mut candidates = Vec::new();
        for ip in (0..n - 1).filter(|&j| vals[j] == m) {
            let mut forbidden = BTreeSet::from([BigUint::zero()]);
            for j in (0..n - 1).filter(|&j| j != ip) {
                let cross = frame.label(ip, j);
                let (q_cross, rem) = cross.div_rem(&pm);
                if !rem.is_zero() {
                    return Err(ExtendError::PreconditionViolated(format!(
                        "{p}^{m} does not divide c({}, {})",
                        frame.original(ip),
                        frame.original(j)
                    )));
                }
                let q_c = &cs[j] / &pm;
                if (&q_cross % &p).is_zero() || (&q_c % &p).is_zero() {
                    continue;
                }
                let inv = mod_inverse(&q_c, &p).expect("coprime to p");
                let r = (inv * q_cross) % &p;
                forbidden.insert(if j < ip { r } else { (&p - r) % &p });
            }
            candidates.push(IpCandidate {
                vertex: frame.original(ip),
                forbidden,
                unrestricted: false,
            });
        }
        if !candidates.iter().any(|c| c.has_admissible(&p)) {
            if m > 0 {
                return Err(ExtendError::NoAdmissibleResidue { p });
            }
            for c in &mut candidates {
                c.unrestricted = true;
            }
        }
        per_prime.push(PrimeLocal {
            p,
            ell,
            m,
            candidates,
            chosen_ip: None,
            chosen_residue: None,
        });
    }
    Ok(ExtensionChoice { edge, per_prime })
}

/// Residue of `y_j` modulo `p^ℓ` determined by `y_{i_p} ≡ r`:
/// `(c'_{i_p})^{-1}·(c_j/p^m · r ∓ c(i_p,j)/p^m)`, minus for `j < i_p`,
/// plus for `j > i_p`, and `r` itself for `j = i_p`.
fn local_residue(frame: &Frame<'_>, local: &PrimeLocal, ipf: usize, r: &BigUint, j: usize) -> BigUint {
    let modulus = local.modulus();
    if j == ipf {
        return r % &modulus;
    }
    let pm = pow(&local.p, local.m);
    let c_ip = frame.c(ipf);
    let inv = mod_inverse(&coprime_part(&c_ip, &local.p), &modulus).expect("coprime to p");
    let scaled = BigInt::from(frame.c(j) / &pm) * BigInt::from(r.clone());
    let cross = BigInt::from(frame.label(ipf, j) / &pm);
    let rhs = if j < ipf { scaled - cross } else { scaled + cross };
    (reduce(&rhs, &modulus) * inv) % &modulus
}

/// Validate `choice` against freshly computed sieve data for `f`; returns
/// the fresh choice with the same selections applied.
fn confirm_choice(f: &Frieze, choice: &ExtensionChoice) -> Result<ExtensionChoice, ExtendError> {
    if !choice.is_complete() {
        return Err(ExtendError::InvalidChoice("every prime needs a selection".into()));
    }
    let mut fresh = admissible_choices(f, choice.edge)?;
    let given: Vec<&BigUint> = choice.per_prime.iter().map(|l| &l.p).collect();
    let expected: Vec<&BigUint> = fresh.per_prime.iter().map(|l| &l.p).collect();
    if given != expected {
        return Err(ExtendError::InvalidChoice(format!(
            "primes {given:?} do not match the prime divisors {expected:?} of the edge label"
        )));
    }
    for (local, sel) in fresh.per_prime.iter_mut().zip(&choice.per_prime) {
        let ip = sel.chosen_ip.expect("complete");
        let r = sel.chosen_residue.as_ref().expect("complete");
        local.select(ip, r)?;
    }
    Ok(fresh)
}

/// Extend `f` by one vertex across `choice.edge`.
pub fn extend_step(f: &Frieze, choice: &ExtensionChoice) -> Result<(Frieze, ExtensionTrace), ExtendError> {
    let choice = confirm_choice(f, choice)?;
    let n = f.n();
    let a = choice.edge.0;
    let frame = Frame { f, a };
    let c0 = frame.c(0);

    let congruences: Vec<(BigUint, BigUint)> = choice
        .per_prime
        .iter()
        .map(|local| {
            let ipf = frame.position(local.chosen_ip.expect("confirmed"));
            let r = local.chosen_residue.as_ref().expect("confirmed");
            (local_residue(&frame, local, ipf, r, 0), local.modulus())
        })
        .collect();
    let (y0, modulus) = crt(&congruences).expect("prime powers are coprime");
    debug_assert_eq!(modulus, c0);
    if y0.is_zero() || !y0.gcd(&c0).is_one() {
        return Err(ExtendError::PostconditionFailed(format!(
            "y0 = {y0} is not a unit modulo {c0}"
        )));
    }

    let mut y = Vec::with_capacity(n - 1);
    y.push(y0.clone());
    for j in 1..n - 1 {
        let (q, rem) = (frame.c(j) * &y0 + frame.label(0, j)).div_rem(&c0);
        if !rem.is_zero() {
            return Err(ExtendError::NonIntegralY { j });
        }
        y.push(q);
    }

    let new_vertex = a + 1;
    let old = |v: usize| if v < new_vertex { v } else { v - 1 };
    let extended = Frieze::from_fn(n + 1, |u, v| {
        if u == new_vertex || v == new_vertex {
            let other = old(if u == new_vertex { v } else { u });
            let k = frame.position(other);
            if k == n - 1 {
                BigUint::one()
            } else {
                y[k].clone()
            }
        } else {
            f.label(old(u), old(v)).clone()
        }
    })
    .map_err(|e| ExtendError::PostconditionFailed(e.to_string()))?;

    let trace = ExtensionTrace {
        frame: (0..n).map(|k| frame.original(k)).collect(),
        choice,
        c0,
        y0_mod_c0: y0,
        y,
        new_vertex,
    };
    Ok((extended, trace))
}

/// Decides the edge and parameters of every extension step.
pub trait ChoicePolicy {
    fn choose(&mut self, f: &Frieze, step: usize) -> Result<ExtensionChoice, ExtendError>;
}

/// First boundary edge (by left endpoint) with label above 1; per prime the
/// first candidate vertex and its smallest admissible residue, unlifted.
#[derive(Debug, Clone, Copy, Default)]
pub struct SmallestChoice;

pub fn first_open_edge(f: &Frieze) -> Option<(usize, usize)> {
    (0..f.n())
        .find(|&a| !f.boundary_label(a).is_one())
        .map(|a| (a, (a + 1) % f.n()))
}

impl ChoicePolicy for SmallestChoice {
    fn choose(&mut self, f: &Frieze, _step: usize) -> Result<ExtensionChoice, ExtendError> {
        let edge = first_open_edge(f)
            .ok_or_else(|| ExtendError::InvalidChoice("frieze is already Conway-Coxeter".into()))?;
        let mut choice = admissible_choices(f, edge)?;
        choice.select_remaining_smallest()?;
        Ok(choice)
    }
}

/// Explicit selection of `i_p` and the residue of `y_{i_p}` for one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSelection {
    pub p: BigUint,
    pub ip: usize,
    pub residue: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepSelection {
    pub edge: (usize, usize),
    pub primes: Vec<PrimeSelection>,
}

/// Replays explicit steps, then hands over to `fallback`. Primes a step
/// leaves out get the smallest choice.
#[derive(Debug, Clone)]
pub struct Scripted<P = SmallestChoice> {
    steps: Vec<StepSelection>,
    fallback: P,
}

impl Scripted<SmallestChoice> {
    pub fn new(steps: Vec<StepSelection>) -> Self {
        Self {
            steps,
            fallback: SmallestChoice,
        }
    }
}

impl<P> Scripted<P> {
    pub fn with_fallback(steps: Vec<StepSelection>, fallback: P) -> Self {
        Self { steps, fallback }
    }
}

impl<P: ChoicePolicy> ChoicePolicy for Scripted<P> {
    fn choose(&mut self, f: &Frieze, step: usize) -> Result<ExtensionChoice, ExtendError> {
        let Some(sel) = self.steps.get(step) else {
            return self.fallback.choose(f, step);
        };
        let mut choice = admissible_choices(f, sel.edge)?;
        for ps in &sel.primes {
            choice.select(&ps.p, ps.ip, &ps.residue)?;
        }
        choice.select_remaining_smallest()?;
        Ok(choice)
    }
}

/// `Σ (c(a,a+1) - 1)` over the boundary: no embedding needs more steps.
pub fn step_bound(f: &Frieze) -> BigUint {
    (0..f.n()).map(|a| f.boundary_label(a) - 1u32).sum()
}

/// Extend `f` step by step until it is Conway–Coxeter.
pub fn embed<P: ChoicePolicy + ?Sized>(f: &Frieze, policy: &mut P) -> Result<Embedding, ExtendError> {
    let report = is_embeddable(f);
    if !report.embeddable() {
        return Err(ExtendError::NotEmbeddable(Box::new(report)));
    }
    let limit = step_bound(f).to_usize().unwrap_or(usize::MAX);
    let mut cur = f.clone();
    let mut vertex_map: Vec<usize> = (0..f.n()).collect();
    let mut traces = Vec::new();
    while !cur.is_conway_coxeter() {
        if traces.len() >= limit {
            return Err(ExtendError::StepLimitExceeded { limit });
        }
        let choice = policy.choose(&cur, traces.len())?;
        let (next, trace) = extend_step(&cur, &choice)?;
        for v in &mut vertex_map {
            if *v >= trace.new_vertex {
                *v += 1;
            }
        }
        traces.push(trace);
        cur = next;
    }
    finish(f, cur, vertex_map, traces)
}

fn finish(
    input: &Frieze,
    cc: Frieze,
    vertex_map: Vec<usize>,
    traces: Vec<ExtensionTrace>,
) -> Result<Embedding, ExtendError> {
    let tri = triangulation_of(&cc).map_err(|e| ExtendError::PostconditionFailed(e.to_string()))?;
    Ok(Embedding {
        input: input.clone(),
        cc,
        tri,
        vertex_map,
        traces,
    })
}

/// Every distinct `y0 mod p^ℓ` reachable for one prime, with the first
/// `(i_p, lifted residue)` producing it. Order: candidates around the
/// polygon, admissible residues ascending, lifts `r + k·p` ascending.
fn distinct_local_options(frame: &Frame<'_>, local: &PrimeLocal) -> Vec<(usize, BigUint)> {
    let modulus = local.modulus();
    let lifts = pow(&local.p, local.ell - 1);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for cand in &local.candidates {
        let ipf = frame.position(cand.vertex);
        for r in cand.admissible_residues(&local.p) {
            for k in num_iter(BigUint::zero(), lifts.clone()) {
                let lifted = &r + k * &local.p;
                let y0 = local_residue(frame, local, ipf, &lifted, 0);
                if seen.insert(y0) {
                    out.push((cand.vertex, lifted));
                }
                if BigUint::from(seen.len()) == modulus {
                    return out;
                }
            }
        }
    }
    out
}

/// All distinct one-step extensions across `edge`, in depth-first order.
pub fn all_extensions(f: &Frieze, edge: (usize, usize)) -> Result<Vec<(Frieze, ExtensionTrace)>, ExtendError> {
    let base = admissible_choices(f, edge)?;
    let frame = Frame { f, a: base.edge.0 };
    let options: Vec<Vec<(usize, BigUint)>> = base
        .per_prime
        .iter()
        .map(|l| distinct_local_options(&frame, l))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; options.len()];
    loop {
        let mut choice = base.clone();
        for (local, (opts, &i)) in choice.per_prime.iter_mut().zip(options.iter().zip(&idx)) {
            let (ip, r) = &opts[i];
            local.select(*ip, r)?;
        }
        out.push(extend_step(f, &choice)?);
        // odometer, last prime fastest
        let mut pos = options.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Depth-first enumeration over every choice point, extending the first
/// open boundary edge at each level. Results are distinct as labeled
/// Conway–Coxeter friezes; at most `limit` are returned.
pub fn enumerate_embeddings(f: &Frieze, limit: usize) -> Result<Vec<Embedding>, ExtendError> {
    if limit == 0 {
        return Err(ExtendError::ZeroLimit);
    }
    let report = is_embeddable(f);
    if !report.embeddable() {
        return Err(ExtendError::NotEmbeddable(Box::new(report)));
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let vertex_map = (0..f.n()).collect();
    explore(f, f.clone(), vertex_map, Vec::new(), limit, &mut seen, &mut out)?;
    Ok(out)
}

fn explore(
    input: &Frieze,
    cur: Frieze,
    vertex_map: Vec<usize>,
    traces: Vec<ExtensionTrace>,
    limit: usize,
    seen: &mut HashSet<Frieze>,
    out: &mut Vec<Embedding>,
) -> Result<(), ExtendError> {
    if out.len() >= limit {
        return Ok(());
    }
    let Some(edge) = first_open_edge(&cur) else {
        if seen.insert(cur.clone()) {
            out.push(finish(input, cur, vertex_map, traces)?);
        }
        return Ok(());
    };
    for (next, trace) in all_extensions(&cur, edge)? {
        if out.len() >= limit {
            break;
        }
        let map = vertex_map
            .iter()
            .map(|&v| if v >= trace.new_vertex { v + 1 } else { v })
            .collect();
        let mut t = traces.clone();
        t.push(trace);
        explore(input, next, map, t, limit, seen, out)?;
    }
    Ok(())
}
