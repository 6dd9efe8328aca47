//! Degree-2 moments of the Haar state, the Schur indicator, and symbolic
//! invariance of the moments.
//!
//! Moments are `h(a_kl a_ij) = (E^{-1})_ki E_lj / tr F`, with `h(1) = 1` and
//! `h(a_ij) = 0` since the fundamental comodule is simple and nontrivial.
//! Indices are 0-based in this API.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::CycloNumber;
use crate::error::{Error, Result};
use crate::hopf::{BEPresentation, CheckOutcome};
use crate::nc::{build_relations, IdealTruncation, NCPolynomial, TensorPolynomial};

/// Largest size for [`invariance_check`].
pub const MAX_INVARIANCE_SIZE: usize = 3;

/// Index tuple `(k, l, i, j)` of the moment `h(a_kl a_ij)`.
pub type MomentIndex = (usize, usize, usize, usize);

/// All degree-2 moments of one presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaarMomentTable {
    size: usize,
    denominator: CycloNumber,
    entries: BTreeMap<MomentIndex, CycloNumber>,
}

impl HaarMomentTable {
    pub fn new(p: &BEPresentation) -> Result<Self> {
        let denominator = p.trace_f().clone();
        if denominator.is_zero() {
            return Err(Error::DegenerateDenominator);
        }
        let n = p.size();
        let e = p.form();
        let inv = e.inverse()?;
        let scale = denominator.inv()?;
        let mut entries = BTreeMap::new();
        for k in 0..n {
            for l in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let v = inv.get(k, i) * e.get(l, j) * &scale;
                        entries.insert((k, l, i, j), v);
                    }
                }
            }
        }
        Ok(Self {
            size: n,
            denominator,
            entries,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `tr F`, the common denominator of the moments.
    pub fn denominator(&self) -> &CycloNumber {
        &self.denominator
    }

    /// `h(a_kl a_ij)`.
    pub fn get(&self, k: usize, l: usize, i: usize, j: usize) -> Result<&CycloNumber> {
        self.entries.get(&(k, l, i, j)).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "moment index ({k}, {l}, {i}, {j}) out of range for n = {}",
                self.size
            ))
        })
    }

    /// Entries in lexicographic `(k, l, i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (&MomentIndex, &CycloNumber)> {
        self.entries.iter()
    }

    /// `h(p)` for `p` of degree at most 2.
    pub fn apply(&self, p: &NCPolynomial) -> Result<CycloNumber> {
        let mut acc = CycloNumber::zero(self.denominator.conductor());
        for (word, c) in p.terms() {
            match word.letters() {
                [] => acc = acc + c,
                [_] => {}
                [x, y] => {
                    let key = (
                        x.row as usize,
                        x.col as usize,
                        y.row as usize,
                        y.col as usize,
                    );
                    acc = acc + c * self.get(key.0, key.1, key.2, key.3)?;
                }
                longer => {
                    return Err(Error::DegreeExceedsTruncation {
                        degree: longer.len(),
                        target: 2,
                    })
                }
            }
        }
        Ok(acc)
    }
}

fn check_index(p: &BEPresentation, idx: [usize; 4]) -> Result<()> {
    if idx.iter().any(|&x| x >= p.size()) {
        return Err(Error::InvalidParameter(format!(
            "moment index {idx:?} out of range for n = {}",
            p.size()
        )));
    }
    Ok(())
}

/// `h(a_kl a_ij) = (E^{-1})_ki E_lj / tr F`.
pub fn haar_moment(
    p: &BEPresentation,
    k: usize,
    l: usize,
    i: usize,
    j: usize,
) -> Result<CycloNumber> {
    check_index(p, [k, l, i, j])?;
    if p.trace_f().is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    let e = p.form();
    let inv = e.inverse()?;
    (inv.get(k, i) * e.get(l, j)).checked_div(p.trace_f())
}

/// `h(a_kl S(a_ij)) = delta_kj F_il / tr F`.
pub fn haar_moment_s(
    p: &BEPresentation,
    k: usize,
    l: usize,
    i: usize,
    j: usize,
) -> Result<CycloNumber> {
    check_index(p, [k, l, i, j])?;
    if p.trace_f().is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    if k != j {
        return Ok(CycloNumber::zero(p.conductor()));
    }
    p.companion().get(i, l).checked_div(p.trace_f())
}

/// `nu_2 = n / tr F`.
pub fn schur_indicator(p: &BEPresentation) -> Result<CycloNumber> {
    p.schur_indicator()
}

/// `nu_2 = h(chi_(1) chi_(2))` with `chi = sum_i a_ii`, evaluated through the
/// coproduct and the moment table.
pub fn schur_indicator_via_character(p: &BEPresentation) -> Result<CycloNumber> {
    if p.trace_f().is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    if !p.cosemisimple().0 {
        return Err(Error::NoHaarState);
    }
    let n = p.size();
    let character = (0..n).fold(NCPolynomial::zero(), |acc, i| {
        acc + NCPolynomial::generator(i, i)
    });
    let squared = TensorPolynomial::comultiply(&character, n).multiply_out();
    HaarMomentTable::new(p)?.apply(&squared)
}

/// Outcome of [`invariance_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub right: CheckOutcome,
    pub left: CheckOutcome,
    pub tuples_checked: usize,
    pub closure_degree: usize,
    /// Tuples `(k, l, i, j)`, 1-based, whose identity did not reduce.
    pub right_failures: Vec<[usize; 4]>,
    pub left_failures: Vec<[usize; 4]>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.right.passed() && self.left.passed()
    }
}

/// Checks `(h (x) id) Delta = h(.) 1 = (id (x) h) Delta` on every `a_kl a_ij`
/// modulo the relations, with products up to degree `2 + margin`.
pub fn invariance_check(p: &BEPresentation, margin: usize) -> Result<InvarianceReport> {
    invariance_check_at(p, 2, margin)
}

/// As [`invariance_check`], reducing in degree `degree >= 2`.
pub fn invariance_check_at(
    p: &BEPresentation,
    degree: usize,
    margin: usize,
) -> Result<InvarianceReport> {
    if degree < 2 {
        return Err(Error::InvalidParameter(
            "degree must be at least 2, the degree of the moments".into(),
        ));
    }
    let n = p.size();
    if n > MAX_INVARIANCE_SIZE {
        return Err(Error::UnsupportedSize {
            size: n,
            reason: format!("invariance check is limited to n <= {MAX_INVARIANCE_SIZE}"),
            guard: true,
        });
    }
    let table = HaarMomentTable::new(p)?;
    let relations = build_relations(p.form())?;
    let trunc = IdealTruncation::build(&relations, n, degree, margin)?;
    check_table(&table, &trunc)
}

fn gen_pair(a: (usize, usize), b: (usize, usize)) -> NCPolynomial {
    &NCPolynomial::generator(a.0, a.1) * &NCPolynomial::generator(b.0, b.1)
}

fn check_table(table: &HaarMomentTable, trunc: &IdealTruncation) -> Result<InvarianceReport> {
    let n = table.size();
    let mut right_failures = Vec::new();
    let mut left_failures = Vec::new();
    let mut tuples = 0;
    for k in 0..n {
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    tuples += 1;
                    let target = NCPolynomial::constant(table.get(k, l, i, j)?.clone());
                    let mut right = NCPolynomial::zero();
                    let mut left = NCPolynomial::zero();
                    for s in 0..n {
                        for t in 0..n {
                            right = right + gen_pair((s, l), (t, j)).scale(table.get(k, s, i, t)?);
                            left = left + gen_pair((k, s), (i, t)).scale(table.get(s, l, t, j)?);
                        }
                    }
                    let tuple = [k + 1, l + 1, i + 1, j + 1];
                    if !trunc
                        .reduces_to_zero(&(right - target.clone()))?
                        .is_in_ideal()
                    {
                        right_failures.push(tuple);
                    }
                    if !trunc.reduces_to_zero(&(left - target))?.is_in_ideal() {
                        left_failures.push(tuple);
                    }
                }
            }
        }
    }
    Ok(InvarianceReport {
        right: outcome(right_failures.is_empty()),
        left: outcome(left_failures.is_empty()),
        tuples_checked: tuples,
        closure_degree: trunc.closure_degree(),
        right_failures,
        left_failures,
    })
}

fn outcome(ok: bool) -> CheckOutcome {
    if ok {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail
    }
}
