//! Noncommutative polynomials in the generators `a_ij`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::CycloNumber;
use crate::matrix::ExactMatrix;

/// The generator `a_{row+1, col+1}` (stored 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub row: u16,
    pub col: u16,
}

impl Generator {
    pub fn new(row: usize, col: usize) -> Self {
        Self {
            row: row as u16,
            col: col as u16,
        }
    }
}

/// A word in the generators; the empty word is the unit.
///
/// Ordered degree-lexicographically with `a_11 < a_12 < ... < a_nn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NCMonomial(Vec<Generator>);

impl NCMonomial {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn new(word: Vec<Generator>) -> Self {
        Self(word)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = Vec::with_capacity(self.0.len() + other.0.len());
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&other.0);
        Self(w)
    }
}

impl Ord for NCMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NCMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NCMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for g in &self.0 {
            write!(f, "a[{},{}]", g.row + 1, g.col + 1)?;
        }
        Ok(())
    }
}

/// A finite linear combination of [`NCMonomial`]s with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPolynomial {
    terms: BTreeMap<NCMonomial, CycloNumber>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::term(NCMonomial::unit(), c)
    }

    pub fn one() -> Self {
        Self::constant(CycloNumber::int(1))
    }

    pub fn term(m: NCMonomial, c: CycloNumber) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// The generator `a_{i+1, j+1}`.
    pub fn generator(i: usize, j: usize) -> Self {
        Self::term(NCMonomial(vec![Generator::new(i, j)]), CycloNumber::int(1))
    }

    pub fn add_term(&mut self, m: NCMonomial, c: CycloNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest word length; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(NCMonomial::degree)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NCMonomial, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &NCMonomial) -> Option<&CycloNumber> {
        self.terms.get(m)
    }

    pub fn constant_term(&self) -> Option<&CycloNumber> {
        self.terms.get(&NCMonomial::unit())
    }

    /// Least common conductor of the coefficients.
    pub fn conductor(&self) -> u64 {
        self.terms
            .values()
            .fold(1, |acc, c| crate::arith::poly::lcm(acc, c.conductor()))
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Extends `a_ij -> images[i][j]` anti-multiplicatively and linearly:
    /// each word is read backwards.
    pub fn apply_antihom(&self, images: &[Vec<NCPolynomial>]) -> NCPolynomial {
        self.substitute(images, true)
    }

    /// Extends `a_ij -> images[i][j]` to an algebra homomorphism.
    pub fn apply_hom(&self, images: &[Vec<NCPolynomial>]) -> NCPolynomial {
        self.substitute(images, false)
    }

    fn substitute(&self, images: &[Vec<NCPolynomial>], reverse: bool) -> NCPolynomial {
        let mut out = NCPolynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = NCPolynomial::constant(c.clone());
            let letters: Box<dyn Iterator<Item = &Generator>> = if reverse {
                Box::new(m.0.iter().rev())
            } else {
                Box::new(m.0.iter())
            };
            for g in letters {
                acc = &acc * &images[g.row as usize][g.col as usize];
            }
            out = out + acc;
        }
        out
    }

    /// Value at a matrix of commuting scalars, `a_ij -> point[i][j]`.
    pub fn evaluate(&self, point: &ExactMatrix) -> CycloNumber {
        let mut acc = CycloNumber::zero(point.conductor());
        for (m, c) in &self.terms {
            let v = m.0.iter().fold(c.clone(), |v, g| {
                v * point.get(g.row as usize, g.col as usize)
            });
            acc = acc + v;
        }
        acc
    }
}

impl fmt::Display for NCPolynomial {
    /// `c * a[i,j]a[k,l] + ...`, ascending monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = c.to_z_string();
            let coeff = if coeff.contains('z') && (coeff[1..].contains(['+', '-'])) {
                format!("({coeff})")
            } else {
                coeff
            };
            if m.degree() == 0 {
                f.write_str(&coeff)?;
            } else {
                write!(f, "{coeff} * {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for NCPolynomial {
    type Output = NCPolynomial;
    fn add(mut self, rhs: NCPolynomial) -> NCPolynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add<&NCPolynomial> for &NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        self.clone() + rhs.clone()
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        NCPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: NCPolynomial) -> NCPolynomial {
        self + -&rhs
    }
}

impl Sub<&NCPolynomial> for &NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: &NCPolynomial) -> NCPolynomial {
        self.clone() + -rhs
    }
}

impl Mul<&NCPolynomial> for &NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = NCPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.concat(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: NCPolynomial) -> NCPolynomial {
        &self * &rhs
    }
}
