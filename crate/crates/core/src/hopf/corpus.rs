//! Named forms with known antipode orders and indicators.

use std::fmt;

use super::presentation::BEPresentation;
use crate::arith::CycloNumber;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

fn ones(count: usize) -> impl Iterator<Item = CycloNumber> {
    std::iter::repeat_with(|| CycloNumber::int(1)).take(count)
}

/// `E = AD(xi, 1, 1, 1, 1, 1)` with `xi = zeta_m`: antipode of order `2m`.
pub fn six_dim_cyclic(m: u64) -> Result<BEPresentation> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let values: Vec<_> = std::iter::once(CycloNumber::zeta(m))
        .chain(ones(5))
        .collect();
    BEPresentation::new(ExactMatrix::antidiag(&values)?)
}

/// Smaller forms with antipode of order `2m`:
/// `AD(1,1,xi,xi)` for `m = 3`, `AD(1,1,1,xi)` for `m = 4`, `AD(1,1,xi)` for `m >= 5`.
pub fn small_cyclic(m: u64) -> Result<BEPresentation> {
    let xi = CycloNumber::zeta(m.max(1));
    let values: Vec<CycloNumber> = match m {
        0..=2 => return Err(Error::InvalidParameter("m must be at least 3".into())),
        3 => ones(2).chain([xi.clone(), xi]).collect(),
        4 => ones(3).chain([xi]).collect(),
        _ => ones(2).chain([xi]).collect(),
    };
    BEPresentation::new(ExactMatrix::antidiag(&values)?)
}

/// The root `t = zeta_5 + zeta_5^4 - 1 = (-3 + sqrt 5) / 2` of `t^2 + 3t + 1`.
pub fn golden_root() -> CycloNumber {
    CycloNumber::zeta(5) + CycloNumber::zeta_pow(5, 4) - CycloNumber::int(1)
}

/// `E = AD(1, 1, t)` with `t^2 + 3t + 1 = 0`: `q = 1` and `S^2` has an
/// eigenvalue `t^2` of infinite order.
pub fn golden_cotriangular() -> BEPresentation {
    let values: Vec<_> = ones(2).chain([golden_root()]).collect();
    BEPresentation::new(ExactMatrix::antidiag(&values).expect("t != 0"))
        .expect("AD(1, 1, t) is invertible")
}

/// `E = AD(-1 x k, 1 x (2n - k))` of size `2n`, `k = (n - 1) / 2`, for odd
/// `n >= 3`: `tr F = 2`, antipode of order 4, `nu_2 = n`.
pub fn signed_antidiagonal(n: usize) -> Result<BEPresentation> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "n must be odd and at least 3, got {n}"
        )));
    }
    let k = (n - 1) / 2;
    let values: Vec<_> = std::iter::repeat_with(|| CycloNumber::int(-1))
        .take(k)
        .chain(ones(2 * n - k))
        .collect();
    BEPresentation::new(ExactMatrix::antidiag(&values)?)
}

/// A named corpus entry as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusExample {
    SixDimCyclic { m: u64 },
    SmallCyclic { m: u64 },
    GoldenCotriangular,
    SignedAntidiagonal { n: usize },
}

impl CorpusExample {
    pub const NAMES: [&'static str; 4] = ["prop2", "remark4", "remark5", "example7"];

    /// Resolves a command-line name and its optional parameters.
    pub fn from_name(name: &str, m: Option<u64>, n: Option<usize>) -> Result<Self> {
        let need_m = |m: Option<u64>| {
            m.ok_or_else(|| Error::InvalidParameter(format!("example {name} needs --m")))
        };
        let reject = |flag: &str| {
            Err(Error::InvalidParameter(format!(
                "example {name} does not take {flag}"
            )))
        };
        match name {
            "prop2" | "remark4" if n.is_some() => reject("--n"),
            "remark5" if m.is_some() => reject("--m"),
            "remark5" if n.is_some() => reject("--n"),
            "example7" if m.is_some() => reject("--m"),
            "prop2" => Ok(Self::SixDimCyclic { m: need_m(m)? }),
            "remark4" => Ok(Self::SmallCyclic { m: need_m(m)? }),
            "remark5" => Ok(Self::GoldenCotriangular),
            "example7" => Ok(Self::SignedAntidiagonal {
                n: n.ok_or_else(|| Error::InvalidParameter("example example7 needs --n".into()))?,
            }),
            other => Err(Error::InvalidParameter(format!(
                "unknown example {other:?}; expected one of {}",
                Self::NAMES.join(", ")
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::SixDimCyclic { .. } => "prop2",
            Self::SmallCyclic { .. } => "remark4",
            Self::GoldenCotriangular => "remark5",
            Self::SignedAntidiagonal { .. } => "example7",
        }
    }

    pub fn build(&self) -> Result<BEPresentation> {
        match *self {
            Self::SixDimCyclic { m } => six_dim_cyclic(m),
            Self::SmallCyclic { m } => small_cyclic(m),
            Self::GoldenCotriangular => Ok(golden_cotriangular()),
            Self::SignedAntidiagonal { n } => signed_antidiagonal(n),
        }
    }
}

impl fmt::Display for CorpusExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SixDimCyclic { m } | Self::SmallCyclic { m } => {
                write!(f, "{} --m {m}", self.name())
            }
            Self::GoldenCotriangular => f.write_str(self.name()),
            Self::SignedAntidiagonal { n } => write!(f, "{} --n {n}", self.name()),
        }
    }
}
