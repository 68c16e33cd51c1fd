//! Exact integer helpers: p-adic valuations, modular inverses, CRT and
//! small-scale factorization.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// `ν_p(x)`, the exponent of `p` in `x`. `x` must be nonzero.
pub fn valuation(x: &BigUint, p: &BigUint) -> u32 {
    debug_assert!(!x.is_zero(), "valuation of zero is undefined");
    let mut v = 0;
    let mut rest = x.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        rest = q;
        v += 1;
    }
}

/// The part of `x` coprime to `p`, i.e. `x / p^{ν_p(x)}`.
pub fn coprime_part(x: &BigUint, p: &BigUint) -> BigUint {
    let mut rest = x.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return rest;
        }
        rest = q;
    }
}

pub fn pow(p: &BigUint, e: u32) -> BigUint {
    num_traits::pow(p.clone(), e as usize)
}

/// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm, or
/// `None` when `gcd(a, modulus) != 1`.
pub fn mod_inverse(a: &BigUint, modulus: &BigUint) -> Option<BigUint> {
    if modulus.is_one() {
        return Some(BigUint::zero());
    }
    let m = BigInt::from(modulus.clone());
    let a = BigInt::from(a % modulus);
    let egcd = a.extended_gcd(&m);
    if !egcd.gcd.is_one() {
        return None;
    }
    egcd.x.mod_floor(&m).to_biguint()
}

/// Reduce a signed value into `[0, modulus)`.
pub fn reduce(x: &BigInt, modulus: &BigUint) -> BigUint {
    let m = BigInt::from(modulus.clone());
    x.mod_floor(&m)
        .to_biguint()
        .expect("mod_floor of a positive modulus is non-negative")
}

/// Combine congruences `x ≡ r_k (mod m_k)` with pairwise coprime moduli.
/// Returns `(x, M)` with `0 ≤ x < M = Π m_k`, or `None` if two moduli share
/// a factor.
pub fn crt(congruences: &[(BigUint, BigUint)]) -> Option<(BigUint, BigUint)> {
    let mut x = BigUint::zero();
    let mut modulus = BigUint::one();
    for (r, m) in congruences {
        // x + modulus * t ≡ r (mod m)
        let inv = mod_inverse(&(&modulus % m), m)?;
        let diff = reduce(&(BigInt::from(r.clone()) - BigInt::from(x.clone())), m);
        let t = (diff * inv) % m;
        x += &modulus * t;
        modulus *= m;
        x %= &modulus;
    }
    Some((x, modulus))
}

/// Distinct prime divisors of `x` in ascending order (trial division).
pub fn prime_divisors(x: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut rest = x.clone();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        if (&rest % &d).is_zero() {
            while (&rest % &d).is_zero() {
                rest /= &d;
            }
            out.push(d.clone());
        }
        d += 1u32;
    }
    if rest > BigUint::one() {
        out.push(rest);
    }
    out
}

/// All primes strictly below `n`.
pub fn primes_below(n: usize) -> Vec<usize> {
    if n < 3 {
        return Vec::new();
    }
    let mut sieve = vec![true; n];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i < n {
        if sieve[i] {
            let mut k = i * i;
            while k < n {
                sieve[k] = false;
                k += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &is_prime)| is_prime.then_some(k))
        .collect()
}
