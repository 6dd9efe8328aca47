//! B(E) as data, and the verdicts that only need `F = E^{-1} E^t`.

use serde::Serialize;

use crate::arith::{certified_sign, q_class, CycloNumber, QClass, Sign};
use crate::error::{Error, Result};
use crate::matrix::{companion, projective_order, ExactMatrix, ProjOrderVerdict};

/// Default iteration bound for non-diagonal `F`.
pub const DEFAULT_MAX_K: u64 = 256;

/// The Hopf algebra B(E) for an invertible `E` of size at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BEPresentation {
    form: ExactMatrix,
    companion: ExactMatrix,
    trace_f: CycloNumber,
}

impl BEPresentation {
    pub fn new(form: ExactMatrix) -> Result<Self> {
        if form.size() < 2 {
            return Err(Error::UnsupportedSize {
                size: form.size(),
                reason: "B(E) analysis needs n >= 2".into(),
                guard: false,
            });
        }
        let companion = companion(&form)?;
        let trace_f = companion.trace();
        Ok(Self {
            form,
            companion,
            trace_f,
        })
    }

    /// The bilinear form `E`.
    pub fn form(&self) -> &ExactMatrix {
        &self.form
    }

    /// `F = E^{-1} E^t`; `S^2(a) = F a F^{-1}`.
    pub fn companion(&self) -> &ExactMatrix {
        &self.companion
    }

    pub fn trace_f(&self) -> &CycloNumber {
        &self.trace_f
    }

    pub fn size(&self) -> usize {
        self.form.size()
    }

    pub fn conductor(&self) -> u64 {
        self.form.conductor()
    }

    /// Whether B(E) is cosemisimple, with the class of `q` that decides it.
    pub fn cosemisimple(&self) -> (bool, QClass) {
        let class = q_class(&self.trace_f);
        (class.is_cosemisimple(), class)
    }

    /// `q = 1`, equivalently `tr F = -2`.
    pub fn cotriangular_hint(&self) -> bool {
        self.trace_f == CycloNumber::int(-2)
    }

    pub fn antipode_order(&self, max_k: u64) -> Result<AntipodeOrder> {
        Ok(match projective_order(&self.companion, max_k)? {
            ProjOrderVerdict::Finite { k, .. } => AntipodeOrder::Finite(2 * k),
            ProjOrderVerdict::Infinite { witness } => AntipodeOrder::Infinite(witness),
            ProjOrderVerdict::Unknown { bound_reached } => AntipodeOrder::Unknown(bound_reached),
        })
    }

    /// Eigenvalues `f_i / f_j` of `S^2` on the `a_ij`, row-major in `(i, j)`.
    pub fn s_squared_spectrum(&self) -> Result<Vec<CycloNumber>> {
        if !self.companion.is_diagonal() {
            return Err(Error::UnsupportedShape(
                "S^2 spectrum needs a diagonal F".into(),
            ));
        }
        let diag = self.companion.diagonal();
        let inverses = diag
            .iter()
            .map(CycloNumber::inv)
            .collect::<Result<Vec<_>>>()?;
        Ok(diag
            .iter()
            .flat_map(|fi| inverses.iter().map(move |fj_inv| fi * fj_inv))
            .collect())
    }

    /// Necessary condition for a compact quantum group structure: every
    /// ratio `f_i / f_j` must be a positive real.
    pub fn cqg_obstruction(&self) -> CqgVerdict {
        let Ok(spectrum) = self.s_squared_spectrum() else {
            return CqgVerdict::Unknown;
        };
        let mut seen: Vec<&CycloNumber> = Vec::new();
        for r in &spectrum {
            if seen.contains(&r) {
                continue;
            }
            if certified_sign(r) != Sign::PositiveReal {
                return CqgVerdict::Obstructed;
            }
            seen.push(r);
        }
        CqgVerdict::NoObstructionFound
    }

    /// `nu_2 = n / tr F` for the fundamental comodule.
    pub fn schur_indicator(&self) -> Result<CycloNumber> {
        if self.trace_f.is_zero() {
            return Err(Error::DegenerateDenominator);
        }
        if !self.cosemisimple().0 {
            return Err(Error::NoHaarState);
        }
        let n = CycloNumber::int(self.size() as i64);
        n.checked_div(&self.trace_f)
    }

    /// All verdicts that do not need ideal truncations.
    pub fn analyze(&self, max_k: u64) -> Result<AnalysisReport> {
        let (cosemisimple, q_class) = self.cosemisimple();
        let nu2 = match self.schur_indicator() {
            Ok(v) => Some(v),
            Err(Error::DegenerateDenominator | Error::NoHaarState) => None,
            Err(e) => return Err(e),
        };
        let s_squared_spectrum = match self.s_squared_spectrum() {
            Ok(v) => Some(v),
            Err(Error::UnsupportedShape(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(AnalysisReport {
            q_class,
            cosemisimple,
            antipode_order: self.antipode_order(max_k)?,
            nu2,
            cotriangular_hint: self.cotriangular_hint(),
            cqg: self.cqg_obstruction(),
            s_squared_spectrum,
        })
    }
}

/// Builds the presentation of B(E).
pub fn make_presentation(form: ExactMatrix) -> Result<BEPresentation> {
    BEPresentation::new(form)
}

/// Order of the antipode, always even when finite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AntipodeOrder {
    Finite(u64),
    /// Carries a diagonal ratio of `F` that is not a root of unity.
    Infinite(String),
    /// No scalar power of a non-diagonal `F` up to this bound.
    Unknown(u64),
}

/// Outcome of the positivity test on the spectrum of `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CqgVerdict {
    Obstructed,
    NoObstructionFound,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub q_class: QClass,
    pub cosemisimple: bool,
    pub antipode_order: AntipodeOrder,
    /// Present iff `tr F != 0` and B(E) is cosemisimple.
    pub nu2: Option<CycloNumber>,
    pub cotriangular_hint: bool,
    pub cqg: CqgVerdict,
    /// `None` when `F` is not diagonal.
    pub s_squared_spectrum: Option<Vec<CycloNumber>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_root_of_unity;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(n: i64) -> CycloNumber {
        CycloNumber::int(n)
    }

    fn ad(values: &[CycloNumber]) -> BEPresentation {
        BEPresentation::new(ExactMatrix::antidiag(values).unwrap()).unwrap()
    }

    #[test]
    fn presentation_caches_trace() {
        let z = CycloNumber::zeta(5);
        let mut vals = vec![z.clone()];
        vals.extend((0..5).map(|_| c(1)));
        let p = ad(&vals);
        let expect = c(4) + &z + z.pow(4);
        assert_eq!(p.trace_f(), &expect);
        let id = BEPresentation::new(ExactMatrix::identity(3, 1)).unwrap();
        assert_eq!(id.trace_f(), &c(3));
        assert_eq!(ad(&[c(1), c(-1)]).trace_f(), &c(-2));
    }

    #[test]
    fn rejected_inputs() {
        assert!(matches!(
            BEPresentation::new(ExactMatrix::identity(1, 1)),
            Err(Error::UnsupportedSize {
                size: 1,
                guard: false,
                ..
            })
        ));
        let sing = ExactMatrix::from_rows(1, vec![vec![c(1), c(2)], vec![c(2), c(4)]]).unwrap();
        assert_eq!(BEPresentation::new(sing), Err(Error::SingularMatrix));
    }

    #[test]
    fn non_cosemisimple_traces() {
        // tr F = 0 gives q = +-i
        let p = ad(&[c(1), c(1), CycloNumber::zeta(3)]);
        assert_eq!(p.cosemisimple(), (false, QClass::RootOfUnityOrder(4)));
        assert_eq!(p.schur_indicator(), Err(Error::DegenerateDenominator));
        // tr F = 1 gives q of order 3
        let p = ad(&[c(1), c(1), CycloNumber::zeta(4)]);
        assert_eq!(p.cosemisimple(), (false, QClass::RootOfUnityOrder(3)));
        assert_eq!(p.schur_indicator(), Err(Error::NoHaarState));
        let report = p.analyze(DEFAULT_MAX_K).unwrap();
        assert_eq!(report.nu2, None);
    }

    #[test]
    fn spectrum_of_diagonal_companion() {
        let id = BEPresentation::new(ExactMatrix::identity(3, 1)).unwrap();
        let spec = id.s_squared_spectrum().unwrap();
        assert_eq!(spec.len(), 9);
        assert!(spec.iter().all(CycloNumber::is_one));

        let z = CycloNumber::zeta(3);
        let p = ad(&[c(1), c(1), z.clone(), z.clone()]);
        let mut distinct: Vec<CycloNumber> = Vec::new();
        for r in p.s_squared_spectrum().unwrap() {
            if !distinct.contains(&r) {
                distinct.push(r);
            }
        }
        assert_eq!(distinct.len(), 3);
        for want in [c(1), z.clone(), z.pow(2)] {
            assert!(distinct.contains(&want));
        }
    }

    #[test]
    fn non_diagonal_companion() {
        // E = [[1,2],[0,1]] gives F = [[-3,-2],[2,1]], -1 times a unipotent
        let e = ExactMatrix::from_rows(1, vec![vec![c(1), c(2)], vec![c(0), c(1)]]).unwrap();
        let p = BEPresentation::new(e).unwrap();
        assert!(matches!(
            p.s_squared_spectrum(),
            Err(Error::UnsupportedShape(_))
        ));
        assert_eq!(p.cqg_obstruction(), CqgVerdict::Unknown);
        assert_eq!(p.antipode_order(16).unwrap(), AntipodeOrder::Unknown(16));
        // F = [[0,-1],[1,0]] and F = [[0,-1],[1,1]] are rotations of orders 4 and 6
        for (rows, expect) in [([[1, 1], [-1, 1]], 4), ([[1, 1], [0, 1]], 6)] {
            let e = ExactMatrix::from_rows(
                1,
                rows.iter()
                    .map(|r| r.iter().map(|&x| c(x)).collect())
                    .collect(),
            )
            .unwrap();
            let p = BEPresentation::new(e).unwrap();
            assert!(!p.companion().is_diagonal());
            assert_eq!(p.antipode_order(16).unwrap(), AntipodeOrder::Finite(expect));
            assert!(p.companion().pow(expect / 2).scalar_value().is_some());
        }
    }

    #[test]
    fn cqg_on_small_forms() {
        let id = BEPresentation::new(ExactMatrix::identity(4, 1)).unwrap();
        assert_eq!(id.cqg_obstruction(), CqgVerdict::NoObstructionFound);
        // t = (-3 + sqrt 5) / 2 is real but negative
        let t = CycloNumber::parse(5, "z+z^4-1").unwrap();
        let p = ad(&[c(1), c(1), t.clone()]);
        assert_eq!(p.cqg_obstruction(), CqgVerdict::Obstructed);
        let p = ad(&[c(1), c(1), t.pow(2)]);
        assert_eq!(p.cqg_obstruction(), CqgVerdict::NoObstructionFound);
        assert_eq!(
            ad(&[c(1), c(-1)]).cqg_obstruction(),
            CqgVerdict::NoObstructionFound
        );
        assert_eq!(
            ad(&[c(-1), c(1)]).cqg_obstruction(),
            CqgVerdict::NoObstructionFound
        );
        let p = ad(&[c(-1), c(1), c(1), c(1)]);
        assert_eq!(p.cqg_obstruction(), CqgVerdict::Obstructed);
        let spectrum = p.s_squared_spectrum().unwrap();
        assert!(spectrum.contains(&c(-1)));
        assert!(is_root_of_unity(&t.pow(2)).unwrap().is_none());
    }

    #[test]
    fn scalar_companion_iff_order_two() {
        for (vals, scalar) in [
            (vec![c(1), c(-1)], true),
            (vec![c(2), c(2)], true),
            (vec![c(1), c(1), c(1)], true),
            (vec![c(1), c(2)], false),
            (vec![c(1), c(-1), c(1), c(1)], false),
        ] {
            let p = ad(&vals);
            let order = p.antipode_order(DEFAULT_MAX_K).unwrap();
            assert_eq!(p.companion().scalar_value().is_some(), scalar);
            assert_eq!(order == AntipodeOrder::Finite(2), scalar, "{vals:?}");
        }
    }

    #[test]
    fn verdicts_ignore_rescaling_of_the_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1e);
        for _ in 0..20 {
            let m = [1u64, 3, 4, 5][rng.gen_range(0..4)];
            let n = rng.gen_range(2..=4);
            let vals: Vec<CycloNumber> = (0..n)
                .map(|_| {
                    let k = rng.gen_range(0..m as i64);
                    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                    CycloNumber::zeta_pow(m, k) * CycloNumber::from_int(m, sign)
                })
                .collect();
            let p = ad(&vals);
            let mu = CycloNumber::from_int(m, rng.gen_range(2..5)) + CycloNumber::zeta(m);
            let scaled = BEPresentation::new(p.form().scale(&mu)).unwrap();
            assert_eq!(p.companion(), scaled.companion());
            assert_eq!(p.cosemisimple(), scaled.cosemisimple());
            assert_eq!(
                p.antipode_order(DEFAULT_MAX_K).unwrap(),
                scaled.antipode_order(DEFAULT_MAX_K).unwrap()
            );
        }
    }

    #[test]
    fn finite_orders_are_even() {
        for m in 1..=12u64 {
            let z = CycloNumber::zeta(m);
            for vals in [
                vec![z.clone(), c(1)],
                vec![c(1), z.clone(), c(1)],
                vec![z.clone(), c(-1), z.pow(2), c(1)],
            ] {
                if let AntipodeOrder::Finite(k) = ad(&vals).antipode_order(DEFAULT_MAX_K).unwrap() {
                    assert_eq!(k % 2, 0);
                }
            }
        }
    }
}
