//! Certified complex embeddings of Q(zeta_m) via outward-rounded dyadic
//! interval arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::cyclo::CycloNumber;
use super::rational::Rational;

const GUARD_BITS: u64 = 16;

/// A closed real interval `[lo, hi]` with rational (dyadic after rounding)
/// endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

fn pow2(bits: u64) -> BigInt {
    BigInt::one() << bits
}

fn round_down(x: &Rational, bits: u64) -> Rational {
    let scale = pow2(bits);
    let scaled = x * Rational::from_integer(scale.clone());
    Rational::new(scaled.floor().to_integer(), scale)
}

fn round_up(x: &Rational, bits: u64) -> Rational {
    let scale = pow2(bits);
    let scaled = x * Rational::from_integer(scale.clone());
    Rational::new(scaled.ceil().to_integer(), scale)
}

impl Interval {
    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn around(center: Rational, radius: &Rational) -> Self {
        Self {
            lo: &center - radius,
            hi: center + radius,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// Widens the endpoints outward onto the grid `2^-bits`.
    pub fn round_outward(&self, bits: u64) -> Self {
        Self {
            lo: round_down(&self.lo, bits),
            hi: round_up(&self.hi, bits),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let a = &self.lo * r;
        let b = &self.hi * r;
        if r.is_negative() {
            Self { lo: b, hi: a }
        } else {
            Self { lo: a, hi: b }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().expect("nonempty");
        let hi = products.iter().max().cloned().expect("nonempty");
        Self { lo, hi }
    }

    /// Smallest value of `x^2` over the interval.
    pub fn square_lower(&self) -> Rational {
        if self.contains_zero() {
            Rational::zero()
        } else {
            let a = self.lo.abs().min(self.hi.abs());
            &a * &a
        }
    }
}

/// A rectangle in C enclosing an exact complex number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn width(&self) -> Rational {
        self.re.width().max(self.im.width())
    }

    pub fn midpoint(&self) -> (Rational, Rational) {
        (self.re.midpoint(), self.im.midpoint())
    }

    pub fn contains(&self, re: &Rational, im: &Rational) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    /// Certified lower bound on `|z|^2`.
    pub fn modulus_squared_lower(&self) -> Rational {
        self.re.square_lower() + self.im.square_lower()
    }

    /// Midpoint as floats, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let (re, im) = self.midpoint();
        (
            re.to_f64().unwrap_or(f64::NAN),
            im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Fixed-point value `v / 2^bits` together with an error bound in ulps.
struct Fixed {
    value: BigInt,
    err: BigInt,
}

impl Fixed {
    fn to_interval(&self, bits: u64) -> Interval {
        let scale = pow2(bits);
        Interval {
            lo: Rational::new(&self.value - &self.err, scale.clone()),
            hi: Rational::new(&self.value + &self.err, scale),
        }
    }
}

/// `atan(1/x) * 2^bits` by the alternating Taylor series, truncated once the
/// floored terms vanish.
fn atan_inv_fixed(x: u64, bits: u64) -> Fixed {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = pow2(bits).div_floor(&x);
    let mut sum = BigInt::zero();
    let mut err = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let term = power.div_floor(&BigInt::from(2 * k + 1));
        // power carries <= 2 ulps of floor error, the division one more
        err += 3;
        if term.is_zero() {
            // the omitted tail is below the next (true) term, itself < 3 ulps
            err += 3;
            return Fixed { value: sum, err };
        }
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power = power.div_floor(&x2);
        k += 1;
    }
}

/// Interval containing pi, width at most `2^-(bits - 4)`.
///
/// Machin: pi = 16 atan(1/5) - 4 atan(1/239), in fixed point with guard bits.
pub fn pi_interval(bits: u64) -> Interval {
    let work = bits + GUARD_BITS;
    let a = atan_inv_fixed(5, work);
    let b = atan_inv_fixed(239, work);
    let pi = Fixed {
        value: a.value * 16 - b.value * 4,
        err: a.err * 16 + b.err * 4,
    };
    pi.to_interval(work).round_outward(bits + 4)
}

/// Enclosures of `cos(2 pi k / m)` and `sin(2 pi k / m)`.
fn cos_sin_turn(k: i64, m: u64, bits: u64, pi: &Interval) -> (Interval, Interval) {
    let m_i = m as i64;
    let k = k.rem_euclid(m_i);
    // exact values at multiples of a quarter turn
    if (4 * k) % m_i == 0 {
        let quarter = (4 * k) / m_i;
        let (c, s) = match quarter {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        return (
            Interval::point(Rational::from_integer(c.into())),
            Interval::point(Rational::from_integer(s.into())),
        );
    }
    // reduce to a turn fraction in (-1/2, 1/2], so |theta| <= pi
    let mut frac = Rational::new(BigInt::from(k), BigInt::from(m));
    if frac > Rational::new(1.into(), 2.into()) {
        frac -= Rational::one();
    }
    let work = bits + GUARD_BITS;
    debug_assert!(pi.width() <= Rational::new(1.into(), pow2(work)));
    let theta = pi
        .scale(&Rational::from_integer(2.into()))
        .scale(&frac)
        .round_outward(work);
    let center = round_down(&theta.midpoint(), work);
    let radius = (&theta.hi - &center).max(&center - &theta.lo);
    let fixed_center = (&center * Rational::from_integer(pow2(work))).to_integer();
    let cos = taylor_fixed(&fixed_center, work, true).to_interval(work);
    let sin = taylor_fixed(&fixed_center, work, false).to_interval(work);
    // cos and sin are 1-Lipschitz
    let widen = |i: Interval| Interval {
        lo: i.lo - &radius,
        hi: i.hi + &radius,
    };
    (
        widen(cos).round_outward(work),
        widen(sin).round_outward(work),
    )
}

/// Taylor series of cos (or sin) at `x / 2^bits`, `|x / 2^bits| <= 4`, in
/// fixed point with a running error bound.
fn taylor_fixed(x: &BigInt, bits: u64, cosine: bool) -> Fixed {
    let one = pow2(bits);
    let mut term = if cosine { one.clone() } else { x.clone() };
    let mut term_err = BigInt::zero();
    let mut n: u64 = if cosine { 0 } else { 1 };
    let mut sum = BigInt::zero();
    let mut err = BigInt::zero();
    loop {
        sum += &term;
        err += &term_err;
        let denom = BigInt::from((n + 1) * (n + 2));
        // next = -term * x^2 / ((n+1)(n+2)); the three floors cost < 4 ulps
        let t = (&term * x).div_floor(&one);
        let t = (&t * x).div_floor(&one);
        term = -t.div_floor(&denom);
        // |x|^2 <= 16 amplifies the carried error
        term_err = Integer::div_ceil(&(&term_err * 16), &denom) + 4;
        n += 2;
        if n > 4 && term.abs() <= BigInt::one() {
            // alternating, decreasing tail: bounded by the first omitted term
            err += term.abs() + &term_err;
            return Fixed { value: sum, err };
        }
    }
}

/// Certified enclosure of `x` under `zeta_m -> exp(2 pi i / m)`.
pub fn embed(x: &CycloNumber, precision_bits: u64) -> ComplexInterval {
    assert!(precision_bits >= 8, "precision_bits must be at least 8");
    let m = x.conductor();
    let zero = || Interval::point(Rational::zero());
    let mut acc = ComplexInterval {
        re: zero(),
        im: zero(),
    };
    let work = precision_bits + GUARD_BITS + bit_length(&x.coefficient_norm());
    let pi = pi_interval(work + GUARD_BITS + 4);
    for (j, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (cos, sin) = cos_sin_turn(j as i64, m, work, &pi);
        acc.re = acc.re.add(&cos.scale(c));
        acc.im = acc.im.add(&sin.scale(c));
    }
    ComplexInterval {
        re: acc.re.round_outward(precision_bits + 2),
        im: acc.im.round_outward(precision_bits + 2),
    }
}

fn bit_length(r: &Rational) -> u64 {
    let (q, _) = r.numer().div_rem(r.denom());
    q.abs().bits() + 1
}

/// Outcome of [`certified_sign`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Zero,
    PositiveReal,
    NegativeReal,
    NotReal,
}

/// Exact zero and reality tests, then adaptive-precision embedding until the
/// enclosure of a nonzero real value excludes 0.
pub fn certified_sign(x: &CycloNumber) -> Sign {
    if x.is_zero() {
        return Sign::Zero;
    }
    if !x.is_real() {
        return Sign::NotReal;
    }
    let mut bits = 64;
    loop {
        let z = embed(x, bits);
        if z.re.lo.is_positive() {
            return Sign::PositiveReal;
        }
        if z.re.hi.is_negative() {
            return Sign::NegativeReal;
        }
        bits *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::totient;
    use crate::arith::rational::ratio;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rf(x: f64) -> Rational {
        Rational::from_float(x).unwrap()
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn pi_is_enclosed() {
        let pi = pi_interval(64);
        let digits = Rational::new(
            "31415926535897932384626433832795028841971".parse().unwrap(),
            BigInt::from(10u64).pow(40),
        );
        let tight = Interval::around(
            digits,
            &Rational::new(1.into(), BigInt::from(10u64).pow(40)),
        );
        assert!(pi.lo <= tight.hi && tight.lo <= pi.hi);
        assert!(pi.lo > rf(3.14159265358979) && pi.hi < rf(3.14159265358980));
        assert!(pi.width() < Rational::new(1.into(), pow2(58)));
        let wide = pi_interval(200);
        assert!(wide.lo >= pi.lo && wide.hi <= pi.hi);
    }

    #[test]
    fn zeta_embeddings_contain_float_values() {
        for m in 1..=24u64 {
            for k in 0..m as i64 {
                let (c, s) = cos_sin_turn(k, m, 60, &pi_interval(60 + GUARD_BITS + 4));
                let ang = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
                let slack = rf(1e-13);
                assert!(Interval::around(rf(ang.cos()), &slack).lo <= c.hi);
                assert!(Interval::around(rf(ang.cos()), &slack).hi >= c.lo);
                assert!(Interval::around(rf(ang.sin()), &slack).lo <= s.hi);
                assert!(Interval::around(rf(ang.sin()), &slack).hi >= s.lo);
                assert!(c.width() < Rational::new(1.into(), pow2(55)));
            }
        }
    }

    #[test]
    fn doubling_precision_shrinks_width() {
        let x = CycloNumber::parse(7, "3/2*z^5-z^2+4").unwrap();
        let mut prev = embed(&x, 16).width();
        for bits in [32, 64, 128, 256] {
            let w = embed(&x, bits).width();
            assert!(w <= prev);
            assert!(w <= Rational::new(1.into(), pow2(bits - 4)), "bits {bits}");
            prev = w;
        }
    }

    #[test]
    fn signs() {
        let golden = CycloNumber::zeta(5) + CycloNumber::zeta_pow(5, 4);
        assert_eq!(certified_sign(&golden), Sign::PositiveReal);
        assert_eq!(certified_sign(&-&golden), Sign::NegativeReal);
        assert_eq!(certified_sign(&CycloNumber::zeta(4)), Sign::NotReal);
        assert_eq!(certified_sign(&CycloNumber::zero(9)), Sign::Zero);
    }

    #[test]
    fn certified_sign_tiny_values() {
        // golden - 0.618033988749894848 is a tiny positive real
        let golden = CycloNumber::zeta(5) + CycloNumber::zeta_pow(5, 4);
        let approx = CycloNumber::rational(Rational::new(
            BigInt::from(618033988749894848u64),
            BigInt::from(10u64).pow(18),
        ));
        assert_eq!(certified_sign(&(&golden - &approx)), Sign::PositiveReal);
    }

    fn random_cyclo(rng: &mut ChaCha8Rng) -> CycloNumber {
        let m = rng.gen_range(1..=12u64);
        let raw = (0..totient(m))
            .map(|_| ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
            .collect();
        CycloNumber::from_raw(m, raw)
    }

    #[test]
    fn embedding_respects_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let a = random_cyclo(&mut rng);
            let b = random_cyclo(&mut rng);
            let ea = embed(&a, 64);
            let eb = embed(&b, 64);
            let ab = embed(&(&a * &b), 64);
            let product = ea.mul(&eb);
            // the exact product lies in both enclosures, so they must meet
            assert!(product.re.lo <= ab.re.hi && ab.re.lo <= product.re.hi);
            assert!(product.im.lo <= ab.im.hi && ab.im.lo <= product.im.hi);
            let (ar, ai) = ea.midpoint();
            let (br, bi) = eb.midpoint();
            let mid_re = &ar * &br - &ai * &bi;
            let mid_im = &ar * &bi + &ai * &br;
            let grown = ComplexInterval {
                re: Interval::around(ab.re.midpoint(), &(product.re.width() + ab.re.width())),
                im: Interval::around(ab.im.midpoint(), &(product.im.width() + ab.im.width())),
            };
            assert!(grown.contains(&mid_re, &mid_im));
        }
    }

    #[test]
    fn sign_agrees_with_high_precision_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut checked = 0;
        while checked < 100 {
            let a = random_cyclo(&mut rng);
            let real = &a + &a.conjugate();
            if real.is_zero() {
                continue;
            }
            let reference = embed(&real, 256);
            let expected = if reference.re.lo.is_positive() {
                Sign::PositiveReal
            } else {
                assert!(reference.re.hi.is_negative());
                Sign::NegativeReal
            };
            assert_eq!(certified_sign(&real), expected);
            let (f, _) = real.approx();
            assert_eq!(f > 0.0, expected == Sign::PositiveReal);
            checked += 1;
        }
    }
}
