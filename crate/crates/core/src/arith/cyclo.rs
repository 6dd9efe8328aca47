//! Elements of the cyclotomic field Q(zeta_m) on the power basis.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{cyclotomic_modulus, inverse_mod, lcm, reduce_mod_monic, totient};
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// An exact element `sum_j c_j zeta^j` of Q(zeta_m), `0 <= j < phi(m)`.
///
/// Values with different conductors compare and combine by embedding both
/// into Q(zeta_lcm). The `try_*` methods refuse to do that and report
/// [`Error::ConductorMismatch`] instead.
#[derive(Clone)]
pub struct CycloNumber {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        Self {
            conductor,
            coeffs: vec![Rational::zero(); totient(conductor) as usize],
        }
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    pub fn from_rational(conductor: u64, r: Rational) -> Self {
        let mut x = Self::zero(conductor);
        x.coeffs[0] = r;
        x
    }

    pub fn from_int(conductor: u64, n: i64) -> Self {
        Self::from_rational(conductor, Rational::from_integer(BigInt::from(n)))
    }

    /// A plain rational, living in Q = Q(zeta_1).
    pub fn rational(r: Rational) -> Self {
        Self::from_rational(1, r)
    }

    pub fn int(n: i64) -> Self {
        Self::from_int(1, n)
    }

    /// `zeta_m^k`, for any integer `k`.
    pub fn zeta_pow(conductor: u64, k: i64) -> Self {
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::from_raw(conductor, raw)
    }

    /// The generator `zeta_m = exp(2 pi i / m)`.
    pub fn zeta(conductor: u64) -> Self {
        Self::zeta_pow(conductor, 1)
    }

    /// Builds `sum_j raw[j] zeta^j` for arbitrary length, reducing modulo Phi_m.
    pub fn from_raw(conductor: u64, mut raw: Vec<Rational>) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let m = conductor as usize;
        if raw.len() > m {
            // zeta^m = 1
            for k in (m..raw.len()).rev() {
                let c = std::mem::replace(&mut raw[k], Rational::zero());
                if !c.is_zero() {
                    raw[k % m] += c;
                }
            }
            raw.truncate(m);
        }
        reduce_mod_monic(&mut raw, &cyclotomic_modulus(conductor));
        Self {
            conductor,
            coeffs: raw,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coefficients, length `phi(conductor)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// Re-expresses `self` in Q(zeta_target); `target` must be a multiple of
    /// the current conductor.
    pub fn promote(&self, target: u64) -> Self {
        assert!(
            target.is_multiple_of(self.conductor),
            "cannot embed Q(zeta_{}) into Q(zeta_{target})",
            self.conductor
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        Self::from_raw(target, raw)
    }

    fn aligned<'a>(
        a: &'a Self,
        b: &'a Self,
    ) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if a.conductor == b.conductor {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else {
            let l = lcm(a.conductor, b.conductor);
            (Cow::Owned(a.promote(l)), Cow::Owned(b.promote(l)))
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(Error::ConductorMismatch {
                left: self.conductor,
                right: other.conductor,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_same(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.sub_same(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_same(other))
    }

    fn add_same(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            conductor: self.conductor,
            coeffs,
        }
    }

    fn sub_same(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            conductor: self.conductor,
            coeffs,
        }
    }

    fn mul_same(&self, other: &Self) -> Self {
        if let Some(r) = other.to_rational() {
            return self.scale(&r);
        }
        if let Some(r) = self.to_rational() {
            return other.scale(&r);
        }
        let d = self.coeffs.len();
        let mut raw = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        reduce_mod_monic(&mut raw, &cyclotomic_modulus(self.conductor));
        Self {
            conductor: self.conductor,
            coeffs: raw,
        }
    }

    /// Multiplication by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_one() {
            return self.clone();
        }
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse; [`Error::DivisionByZero`] for zero.
    pub fn inv(&self) -> Result<Self> {
        if let Some(r) = self.to_rational() {
            if r.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Self::from_rational(self.conductor, r.recip()));
        }
        let coeffs = inverse_mod(&self.coeffs, &cyclotomic_modulus(self.conductor))
            .ok_or(Error::DivisionByZero)?;
        Ok(Self {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Complex conjugation, `zeta -> zeta^{-1}`.
    pub fn conjugate(&self) -> Self {
        let m = self.conductor as usize;
        let mut raw = vec![Rational::zero(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(m - j) % m] += c;
        }
        Self::from_raw(self.conductor, raw)
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_signed(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Sum of absolute values of the coefficients, an upper bound on `|x|`
    /// in every complex embedding.
    pub fn coefficient_norm(&self) -> Rational {
        super::poly::abs_sum(&self.coeffs)
    }

    /// Parses a polynomial in `z` such as `"1/2*z+3"`, `"z^2 - z"` or `"-1"`,
    /// reducing it modulo Phi_m.
    pub fn parse(conductor: u64, text: &str) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::parse("conductor", "conductor must be positive"));
        }
        let raw = parse_z_polynomial(text)?;
        Ok(Self::from_raw(conductor, raw))
    }

    /// Canonical text form: descending powers of `z`, no spaces.
    pub fn to_z_string(&self) -> String {
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let power = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            if j == 0 {
                out.push_str(&format_rational(&a));
            } else if a.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format_rational(&a));
                out.push('*');
                out.push_str(&power);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Nearest `f64` pair under the standard embedding (not certified).
    pub fn approx(&self) -> (f64, f64) {
        let m = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * j as f64 / m;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

fn parse_z_polynomial(text: &str) -> Result<Vec<Rational>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| Error::parse("entry", format!("{msg} in `{text}`"));
    if s.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut raw: Vec<Rational> = Vec::new();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = Rational::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos != 0 {
            return Err(err("expected `+` or `-`"));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let term = &s[start..pos];
        if term.is_empty() {
            return Err(err("empty term"));
        }
        let (coeff, power) = parse_term(term).ok_or_else(|| err(&format!("bad term `{term}`")))?;
        if raw.len() <= power {
            raw.resize(power + 1, Rational::zero());
        }
        raw[power] += sign * coeff;
    }
    Ok(raw)
}

fn parse_term(term: &str) -> Option<(Rational, usize)> {
    match term.find('z') {
        None => parse_rational(term).ok().map(|r| (r, 0)),
        Some(idx) => {
            let (head, tail) = term.split_at(idx);
            let head = head.strip_suffix('*').unwrap_or(head);
            let coeff = if head.is_empty() {
                Rational::one()
            } else {
                parse_rational(head).ok()?
            };
            let tail = &tail[1..];
            let power = if tail.is_empty() {
                1
            } else {
                let p = tail.strip_prefix('^')?;
                if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                p.parse().ok()?
            };
            Some((coeff, power))
        }
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_z_string())
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (m={})", self.to_z_string(), self.conductor)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $same:ident) => {
        impl $trait<&CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                let (a, b) = CycloNumber::aligned(self, rhs);
                a.$same(&b)
            }
        }
        impl $trait<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                (&self).$method(rhs)
            }
        }
        impl $trait<CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_same);
binop!(Sub, sub, sub_same);
binop!(Mul, mul, mul_same);

impl Div<&CycloNumber> for &CycloNumber {
    type Output = CycloNumber;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &CycloNumber) -> CycloNumber {
        self.checked_div(rhs)
            .expect("division by zero in Q(zeta_m)")
    }
}

impl Div<CycloNumber> for CycloNumber {
    type Output = CycloNumber;
    fn div(self, rhs: CycloNumber) -> CycloNumber {
        &self / &rhs
    }
}

impl serde::Serialize for CycloNumber {
    /// `{"conductor": m, "coeffs": {"j": "p/q", ...}}`, zero coefficients
    /// omitted, keys in increasing `j`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        struct Coeffs<'a>(&'a [Rational]);
        impl serde::Serialize for Coeffs<'_> {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let nonzero: Vec<_> = self
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                let mut map = s.serialize_map(Some(nonzero.len()))?;
                for (j, c) in nonzero {
                    map.serialize_entry(&j.to_string(), &format_rational(c))?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("conductor", &self.conductor)?;
        map.serialize_entry("coeffs", &Coeffs(&self.coeffs))?;
        map.end()
    }
}

impl<'de> serde::Deserialize<'de> for CycloNumber {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(serde::Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            conductor: u64,
            coeffs: std::collections::BTreeMap<String, String>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let mut coeffs = Vec::new();
        for (k, v) in raw.coeffs {
            let j: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient index {k:?}")))?;
            if j >= raw.conductor as usize {
                return Err(D::Error::custom(format!(
                    "coefficient index {j} out of range"
                )));
            }
            let c = parse_rational(&v).map_err(D::Error::custom)?;
            if coeffs.len() <= j {
                coeffs.resize(j + 1, Rational::zero());
            }
            coeffs[j] = c;
        }
        Ok(Self::from_raw(raw.conductor, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, ratio};
    use proptest::prelude::*;

    fn z(m: u64) -> CycloNumber {
        CycloNumber::zeta(m)
    }

    #[test]
    fn basic_identities() {
        assert_eq!(z(3) + z(3).pow(2), CycloNumber::int(-1));
        assert_eq!(z(4) * z(4), CycloNumber::int(-1));
        let inv = z(5).inv().unwrap();
        assert_eq!(inv, CycloNumber::parse(5, "-1-z-z^2-z^3").unwrap());
        assert!((inv * z(5)).is_one());
        assert_eq!(CycloNumber::zero(7).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_conductors_promote() {
        // zeta_6 = -zeta_3^2 since zeta_6^2 = zeta_3.
        assert_eq!(z(6), -z(3).pow(2));
        assert_eq!((z(4) * z(3)).conductor(), 12);
        assert_eq!(z(12).pow(4), z(3));
        assert_eq!(
            z(3).try_add(&z(4)),
            Err(Error::ConductorMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn parse_and_print() {
        let x = CycloNumber::parse(5, "z + z^4 - 1").unwrap();
        // t = z + z^4 - 1 satisfies t^2 + 3t + 1 = 0
        let t2 = &x * &x;
        let three_t = x.scale(&rat(3));
        assert!((t2 + three_t + CycloNumber::int(1)).is_zero());
        assert_eq!(x.to_z_string(), "-z^3-z^2-2");
        let y = CycloNumber::parse(7, "1/2*z+3").unwrap();
        assert_eq!(y.to_z_string(), "1/2*z+3");
        assert_eq!(CycloNumber::parse(7, &y.to_z_string()).unwrap(), y);
        assert_eq!(
            CycloNumber::parse(3, "2z^2").unwrap(),
            z(3).pow(2).scale(&rat(2))
        );
        for bad in ["", "z^", "1/0", "3x", "+", "z^-1", "1..2"] {
            assert!(CycloNumber::parse(3, bad).is_err(), "{bad}");
        }
        assert_eq!(CycloNumber::zero(5).to_z_string(), "0");
        assert_eq!(CycloNumber::rational(ratio(-7, 3)).to_z_string(), "-7/3");
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(4).conjugate(), -z(4));
        assert!((z(5) + z(5).pow(4)).is_real());
        assert!(!z(4).is_real());
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloNumber> {
        (1u64..=12).prop_flat_map(|m| {
            let d = totient(m) as usize;
            prop::collection::vec((-6i64..=6, 1i64..=4), d).prop_map(move |cs| {
                let raw = cs.into_iter().map(|(n, d)| ratio(n, d)).collect();
                CycloNumber::from_raw(m, raw)
            })
        })
    }

    fn same_field() -> impl Strategy<Value = (CycloNumber, CycloNumber, CycloNumber)> {
        (1u64..=12).prop_flat_map(|m| {
            let d = totient(m) as usize;
            let one = move || {
                prop::collection::vec((-5i64..=5, 1i64..=3), d).prop_map(move |cs| {
                    CycloNumber::from_raw(m, cs.into_iter().map(|(n, d)| ratio(n, d)).collect())
                })
            };
            (one(), one(), one())
        })
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in same_field()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn conjugation_is_involutive_automorphism((a, b, _c) in same_field()) {
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert_eq!((&a * &b).conjugate(), a.conjugate() * b.conjugate());
            prop_assert_eq!((&a + &b).conjugate(), a.conjugate() + b.conjugate());
        }

        #[test]
        fn text_round_trip(a in arb_cyclo()) {
            let back = CycloNumber::parse(a.conductor(), &a.to_z_string()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
