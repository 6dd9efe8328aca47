//! Symbolic checks that the relations define a Hopf algebra.

use serde::Serialize;

use super::presentation::BEPresentation;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::nc::{
    antipode_images, build_relations, generator_matrix, IdealTruncation, NCPolynomial,
    TensorPolynomial,
};

/// Largest size for the ideal-based checks.
pub const MAX_AXIOM_SIZE: usize = 4;
/// Largest size for the comultiplication check in the tensor alphabet.
pub const MAX_COMULT_SIZE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    /// Not found in the ideal up to the closure degree.
    Fail,
    Skipped,
}

impl CheckOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Self::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub counit: CheckOutcome,
    pub antipode_axiom: CheckOutcome,
    pub s_preserves_ideal: CheckOutcome,
    pub comult_compatible: CheckOutcome,
    pub closure_degree: usize,
}

impl AxiomReport {
    /// No check failed.
    pub fn all_passed(&self) -> bool {
        [
            self.counit,
            self.antipode_axiom,
            self.s_preserves_ideal,
            self.comult_compatible,
        ]
        .iter()
        .all(|c| *c != CheckOutcome::Fail)
    }
}

fn sum_over<F: Fn(usize) -> NCPolynomial>(n: usize, f: F) -> NCPolynomial {
    (0..n).fold(NCPolynomial::zero(), |acc, k| acc + f(k))
}

/// Counit, antipode, `S(I) ⊆ I` and `Delta(I) ⊆ I ⊗ A + A ⊗ I`, all in
/// degree 2 with products up to degree `2 + margin`.
pub fn verify_hopf_axioms(p: &BEPresentation, margin: usize) -> Result<AxiomReport> {
    verify_hopf_axioms_at(p, 2, margin)
}

/// As [`verify_hopf_axioms`], reducing in degree `degree >= 2`.
pub fn verify_hopf_axioms_at(
    p: &BEPresentation,
    degree: usize,
    margin: usize,
) -> Result<AxiomReport> {
    if degree < 2 {
        return Err(Error::InvalidParameter(
            "degree must be at least 2, the degree of the relations".into(),
        ));
    }
    let n = p.size();
    if n > MAX_AXIOM_SIZE {
        return Err(Error::UnsupportedSize {
            size: n,
            reason: format!("axiom verification is limited to n <= {MAX_AXIOM_SIZE}"),
            guard: true,
        });
    }
    let relations = build_relations(p.form())?;
    let trunc = IdealTruncation::build(&relations, n, degree, margin)?;

    let unit = ExactMatrix::identity(n, p.conductor());
    let counit = relations.iter().all(|r| r.evaluate(&unit).is_zero());

    let s = antipode_images(p.form())?;
    let a = generator_matrix(n);
    let mut antipode_axiom = true;
    for i in 0..n {
        for j in 0..n {
            let delta = if i == j {
                NCPolynomial::one()
            } else {
                NCPolynomial::zero()
            };
            let left = sum_over(n, |k| &s[i][k] * &a[k][j]) - delta.clone();
            let right = sum_over(n, |k| &a[i][k] * &s[k][j]) - delta;
            antipode_axiom &= trunc.reduces_to_zero(&left)?.is_in_ideal()
                && trunc.reduces_to_zero(&right)?.is_in_ideal();
        }
    }

    let mut s_preserves_ideal = true;
    for r in &relations {
        s_preserves_ideal &= trunc.reduces_to_zero(&r.apply_antihom(&s))?.is_in_ideal();
    }

    let comult_compatible = if n <= MAX_COMULT_SIZE {
        let mut ok = true;
        for r in &relations {
            ok &= TensorPolynomial::comultiply(r, n).in_ideal_sum(&trunc)?;
        }
        CheckOutcome::from_bool(ok)
    } else {
        CheckOutcome::Skipped
    };

    Ok(AxiomReport {
        counit: CheckOutcome::from_bool(counit),
        antipode_axiom: CheckOutcome::from_bool(antipode_axiom),
        s_preserves_ideal: CheckOutcome::from_bool(s_preserves_ideal),
        comult_compatible,
        closure_degree: trunc.closure_degree(),
    })
}
