//! Root-of-unity decisions in Q(zeta_m) and in its quadratic extensions.

use serde::{Deserialize, Serialize};

use super::cyclo::CycloNumber;
use super::poly::{divisors, lcm, totient};
use crate::error::{Error, Result};

/// Every `N` with `phi(N) <= degree_bound`, ascending.
///
/// Uses `phi(N) >= sqrt(N / 2)`, so scanning `N <= 2 (D + 1)^2` is exhaustive.
pub fn root_of_unity_candidates(degree_bound: u64) -> Vec<u64> {
    assert!(degree_bound >= 1, "degree bound must be positive");
    let limit = 2 * (degree_bound + 1) * (degree_bound + 1);
    (1..=limit)
        .filter(|&n| totient(n) <= degree_bound)
        .collect()
}

/// Multiplicative order of `x` if it is a root of unity.
///
/// The roots of unity of Q(zeta_m) form a cyclic group of order
/// `lcm(2, m)`, so `x^M = 1` with `M = lcm(2, m)` is necessary and sufficient.
pub fn is_root_of_unity(x: &CycloNumber) -> Result<Option<u64>> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let big = lcm(2, x.conductor());
    if !x.pow(big).is_one() {
        return Ok(None);
    }
    Ok(divisors(big).into_iter().find(|&d| x.pow(d).is_one()))
}

/// An element `c0 + c1 x` of Q(zeta_m)[x] / (x^2 + t x + 1).
///
/// The quotient need not be a field; both roots `q, q'` satisfy `q q' = 1`,
/// so statements about "q is a root of unity" are ring-level facts about `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRingElement {
    trace_param: CycloNumber,
    c0: CycloNumber,
    c1: CycloNumber,
}

impl QuadRingElement {
    pub fn new(trace_param: CycloNumber, c0: CycloNumber, c1: CycloNumber) -> Self {
        let m = lcm(trace_param.conductor(), lcm(c0.conductor(), c1.conductor()));
        Self {
            trace_param: trace_param.promote(m),
            c0: c0.promote(m),
            c1: c1.promote(m),
        }
    }

    /// The class of `x` itself, i.e. a root `q` of `q^2 + t q + 1`.
    pub fn generator(trace_param: &CycloNumber) -> Self {
        let m = trace_param.conductor();
        Self::new(
            trace_param.clone(),
            CycloNumber::zero(m),
            CycloNumber::one(m),
        )
    }

    pub fn one(trace_param: &CycloNumber) -> Self {
        let m = trace_param.conductor();
        Self::new(
            trace_param.clone(),
            CycloNumber::one(m),
            CycloNumber::zero(m),
        )
    }

    pub fn components(&self) -> (&CycloNumber, &CycloNumber) {
        (&self.c0, &self.c1)
    }

    pub fn is_one(&self) -> bool {
        self.c0.is_one() && self.c1.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        // x^2 = -t x - 1
        let a1b1 = &self.c1 * &other.c1;
        let c0 = &(&self.c0 * &other.c0) - &a1b1;
        let c1 =
            &(&(&self.c0 * &other.c1) + &(&self.c1 * &other.c0)) - &(&self.trace_param * &a1b1);
        Self {
            trace_param: self.trace_param.clone(),
            c0,
            c1,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.trace_param);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Root-of-unity class of the deformation parameter `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QClass {
    One,
    MinusOne,
    RootOfUnityOrder(u64),
    NotRootOfUnity,
}

impl QClass {
    /// Whether O(SL_q(2)) at this `q` is cosemisimple.
    pub fn is_cosemisimple(self) -> bool {
        !matches!(self, QClass::RootOfUnityOrder(_))
    }
}

/// Classifies the roots of `q^2 + t q + 1 = 0`.
pub fn q_class(t: &CycloNumber) -> QClass {
    let m = t.conductor();
    if *t == CycloNumber::int(-2) {
        return QClass::One;
    }
    if *t == CycloNumber::int(2) {
        return QClass::MinusOne;
    }
    let q = QuadRingElement::generator(t);
    // [Q(zeta_m, q) : Q] <= 2 phi(m)
    for n in root_of_unity_candidates(2 * totient(m)) {
        if q.pow(n).is_one() {
            return QClass::RootOfUnityOrder(n);
        }
    }
    QClass::NotRootOfUnity
}
