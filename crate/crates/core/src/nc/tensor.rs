//! Elements of A (x) A in the two-sided alphabet: `x_ij = a_ij (x) 1` and
//! `y_ij = 1 (x) a_ij`, with every `x` commuting past every `y`.

use std::collections::BTreeMap;

use super::poly::{Generator, NCMonomial, NCPolynomial};
use super::truncation::IdealTruncation;
use crate::arith::CycloNumber;
use crate::error::Result;

/// `sum c * (left word) (x) (right word)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorPolynomial {
    terms: BTreeMap<(NCMonomial, NCMonomial), CycloNumber>,
}

impl TensorPolynomial {
    fn add_term(&mut self, key: (NCMonomial, NCMonomial), c: CycloNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Delta(p)` with `Delta(a_ij) = sum_k a_ik (x) a_kj`, extended
    /// multiplicatively.
    pub fn comultiply(p: &NCPolynomial, n: usize) -> Self {
        let mut out = Self::default();
        for (m, c) in p.terms() {
            // expand letter by letter
            let mut partial: Vec<(Vec<Generator>, Vec<Generator>)> = vec![(Vec::new(), Vec::new())];
            for g in m.letters() {
                let mut next = Vec::with_capacity(partial.len() * n);
                for (l, r) in &partial {
                    for k in 0..n {
                        let mut l2 = l.clone();
                        let mut r2 = r.clone();
                        l2.push(Generator::new(g.row as usize, k));
                        r2.push(Generator::new(k, g.col as usize));
                        next.push((l2, r2));
                    }
                }
                partial = next;
            }
            for (l, r) in partial {
                out.add_term((NCMonomial::new(l), NCMonomial::new(r)), c.clone());
            }
        }
        out
    }

    /// The multiplication map `u (x) v -> u v`.
    pub fn multiply_out(&self) -> NCPolynomial {
        let mut out = NCPolynomial::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(l.concat(r), c.clone());
        }
        out
    }

    /// Whether the element lies in `I (x) A + A (x) I`, with `I` replaced by
    /// its truncation: the image under `NF (x) NF` must vanish.
    pub fn in_ideal_sum(&self, t: &IdealTruncation) -> Result<bool> {
        // group by right word, reduce the left factors
        let mut by_right: BTreeMap<&NCMonomial, NCPolynomial> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            by_right
                .entry(r)
                .or_default()
                .add_term(l.clone(), c.clone());
        }
        // left normal-form monomial -> polynomial in right words
        let mut by_left: BTreeMap<NCMonomial, NCPolynomial> = BTreeMap::new();
        for (r, left) in by_right {
            let nf = t.normal_form(&left)?;
            for (l, c) in nf.terms() {
                by_left
                    .entry(l.clone())
                    .or_default()
                    .add_term(r.clone(), c.clone());
            }
        }
        for right in by_left.values() {
            if !t.normal_form(right)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
