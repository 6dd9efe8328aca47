//! Dense univariate polynomials (ascending coefficients) used to build and
//! reduce modulo cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Euler's totient.
pub fn totient(mut n: u64) -> u64 {
    assert!(n >= 1, "totient of zero");
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `m`-th cyclotomic polynomial, ascending integer coefficients.
///
/// Computed as `(x^m - 1) / prod_{d | m, d < m} Phi_d` by exact division.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic polynomial of order zero");
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in divisors(m) {
        if d == m {
            continue;
        }
        num = exact_div_monic(&num, &cyclotomic_modulus(d));
    }
    num
}

/// Memoized `Phi_m`; callers treat it as read-only.
pub(crate) fn cyclotomic_modulus(m: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("cyclotomic cache poisoned").get(&m) {
        return p.clone();
    }
    let p = Arc::new(cyclotomic_polynomial(m));
    cache
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(m)
        .or_insert(p)
        .clone()
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quo = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quo[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quo
}

/// Reduces `coeffs` modulo the monic integer polynomial `modulus` in place,
/// leaving exactly `deg(modulus)` coefficients.
pub(crate) fn reduce_mod_monic(coeffs: &mut Vec<Rational>, modulus: &[BigInt]) {
    let d = modulus.len() - 1;
    if coeffs.len() > d {
        for k in (d..coeffs.len()).rev() {
            if coeffs[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut coeffs[k], Rational::zero());
            for (i, m) in modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    let t = &c * Rational::from_integer(m.clone());
                    coeffs[k - d + i] -= t;
                }
            }
        }
    }
    coeffs.resize(d, Rational::zero());
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![Rational::zero(); rem.len() - db];
    for k in (0..quo.len()).rev() {
        let c = &rem[k + db] / lead;
        if c.is_zero() {
            continue;
        }
        for (i, y) in b.iter().enumerate() {
            rem[k + i] -= &c * y;
        }
        quo[k] = c;
    }
    trim(&mut rem);
    (quo, rem)
}

/// Inverse of `a` modulo the irreducible `modulus`, via the extended
/// Euclidean algorithm. Returns `None` when `a` is zero (or shares a factor).
pub(crate) fn inverse_mod(a: &[Rational], modulus: &[BigInt]) -> Option<Vec<Rational>> {
    let m: Vec<Rational> = modulus
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect();
    let mut a = a.to_vec();
    trim(&mut a);
    if a.is_empty() {
        return None;
    }
    // Invariant: s_i * a == r_i (mod m).
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while r1.len() > 1 {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        if r1.is_empty() {
            return None;
        }
    }
    let c = r1[0].clone();
    let mut inv: Vec<Rational> = s1.iter().map(|x| x / &c).collect();
    let (_, rem) = poly_divrem(&inv, &m);
    inv = rem;
    inv.resize(modulus.len() - 1, Rational::zero());
    Some(inv)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub(crate) fn abs_sum(coeffs: &[Rational]) -> Rational {
    coeffs
        .iter()
        .map(|c| c.abs())
        .fold(Rational::zero(), |a, b| a + b)
}
