//! Degree-truncated linear algebra for the two-sided relation ideal.
//!
//! All products `u r v` of a relation `r` with words `u, v` up to the closure
//! degree are row-reduced with monomials ordered degree-descending. Rows whose
//! leading monomial has degree at most the target degree then span exactly
//! the part of the truncated ideal that lives in degree `<= d`.

use std::collections::HashMap;

use super::poly::{Generator, NCMonomial, NCPolynomial};
use crate::arith::poly::lcm;
use crate::arith::CycloNumber;
use crate::error::{Error, Result};

/// Default cap on stored nonzero entries during elimination.
pub const DEFAULT_CELL_LIMIT: usize = 2_000_000;

/// Words of length `<= max_degree` over `n^2` letters, encoded so that the
/// integer order is the degree-lexicographic monomial order.
#[derive(Clone, Debug)]
struct WordCode {
    letters: u64,
    /// `offsets[k]` = number of words of length `< k`.
    offsets: Vec<u64>,
}

impl WordCode {
    fn new(n: usize, max_degree: usize) -> Result<Self> {
        let letters = (n * n) as u64;
        let mut offsets = vec![0u64];
        let mut count: u64 = 1;
        for _ in 0..=max_degree {
            let last = *offsets.last().expect("nonempty");
            let next = last
                .checked_add(count)
                .ok_or_else(|| too_many(n, max_degree))?;
            offsets.push(next);
            count = count
                .checked_mul(letters)
                .ok_or_else(|| too_many(n, max_degree))?;
        }
        Ok(Self { letters, offsets })
    }

    fn words_up_to(&self, degree: usize) -> u64 {
        self.offsets[degree + 1]
    }

    fn encode(&self, word: &[Generator]) -> u64 {
        let n = (self.letters as f64).sqrt().round() as u64;
        let body = word.iter().fold(0u64, |acc, g| {
            acc * self.letters + g.row as u64 * n + g.col as u64
        });
        self.offsets[word.len()] + body
    }

    fn encode_parts(&self, parts: &[&[Generator]]) -> u64 {
        let n = (self.letters as f64).sqrt().round() as u64;
        let mut len = 0;
        let mut body = 0u64;
        for part in parts {
            for g in *part {
                body = body * self.letters + g.row as u64 * n + g.col as u64;
                len += 1;
            }
        }
        self.offsets[len] + body
    }

    fn degree(&self, code: u64) -> usize {
        self.offsets.partition_point(|&o| o <= code) - 1
    }

    fn decode(&self, code: u64) -> NCMonomial {
        let n = (self.letters as f64).sqrt().round() as u64;
        let len = self.degree(code);
        let mut body = code - self.offsets[len];
        let mut word = vec![Generator::new(0, 0); len];
        for slot in word.iter_mut().rev() {
            let letter = body % self.letters;
            body /= self.letters;
            *slot = Generator::new((letter / n) as usize, (letter % n) as usize);
        }
        NCMonomial::new(word)
    }
}

fn too_many(n: usize, degree: usize) -> Error {
    Error::UnsupportedSize {
        size: n,
        reason: format!("words of degree {degree} over {} letters overflow", n * n),
        guard: true,
    }
}

/// Sparse row, strictly descending codes, no zero coefficients.
type Row = Vec<(u64, CycloNumber)>;

/// `row - c * pivot` where both are descending.
fn sub_scaled(row: &Row, c: &CycloNumber, pivot: &Row) -> Row {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 > pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 > row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, -(c * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(c * &pivot[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Answer to an ideal-membership query against a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Certified: the polynomial is a combination of products `u r v`.
    InIdeal,
    /// No certificate among products of degree `<= closure_degree`.
    NotInIdealUpToClosure { closure_degree: usize },
}

impl Verdict {
    pub fn is_in_ideal(self) -> bool {
        self == Verdict::InIdeal
    }
}

/// Row-reduced spanning set of the ideal's degree-`<= d` part, as far as it
/// is visible from products of degree `<= d + margin`.
#[derive(Clone, Debug)]
pub struct IdealTruncation {
    n: usize,
    conductor: u64,
    target_degree: usize,
    closure_degree: usize,
    code: WordCode,
    /// Leading code -> row with unit leading coefficient; leads of degree `<= d` only.
    basis: HashMap<u64, Row>,
    closure_rank: usize,
    products: usize,
}

impl IdealTruncation {
    /// Builds the truncation with the default cell limit.
    pub fn build(
        relations: &[NCPolynomial],
        n: usize,
        target_degree: usize,
        margin: usize,
    ) -> Result<Self> {
        Self::build_with_limit(relations, n, target_degree, margin, DEFAULT_CELL_LIMIT)
    }

    pub fn build_with_limit(
        relations: &[NCPolynomial],
        n: usize,
        target_degree: usize,
        margin: usize,
        cell_limit: usize,
    ) -> Result<Self> {
        let closure_degree = target_degree + margin;
        let code = WordCode::new(n, closure_degree)?;
        let conductor = relations.iter().fold(1, |acc, r| lcm(acc, r.conductor()));

        let words: Vec<Vec<Vec<Generator>>> =
            (0..=closure_degree).map(|len| all_words(n, len)).collect();

        // every product u r v of degree <= D, as rows
        let mut rows: Vec<Row> = Vec::new();
        for r in relations {
            let Some(deg_r) = r.degree() else { continue };
            if deg_r > closure_degree {
                continue;
            }
            let terms: Vec<(&NCMonomial, CycloNumber)> =
                r.terms().map(|(m, c)| (m, c.promote(conductor))).collect();
            let spare = closure_degree - deg_r;
            for left_len in 0..=spare {
                for right_len in 0..=spare - left_len {
                    for u in &words[left_len] {
                        for v in &words[right_len] {
                            let mut row: Row = terms
                                .iter()
                                .map(|(m, c)| (code.encode_parts(&[u, m.letters(), v]), c.clone()))
                                .collect();
                            row.sort_unstable_by_key(|e| std::cmp::Reverse(e.0));
                            rows.push(row);
                        }
                    }
                }
            }
        }
        let products = rows.len();
        rows.sort_by_key(|r| r.first().map(|t| t.0));

        let mut pivots: HashMap<u64, Row> = HashMap::new();
        let mut cells = 0usize;
        for mut row in rows {
            while let Some((lead, c)) = row.first() {
                match pivots.get(lead) {
                    Some(p) => row = sub_scaled(&row, &c.clone(), p),
                    None => break,
                }
            }
            let Some((lead, c)) = row.first().cloned() else {
                continue;
            };
            let inv = c.inv().expect("leading coefficient is nonzero");
            let row: Row = row.into_iter().map(|(k, v)| (k, &v * &inv)).collect();
            cells += row.len();
            if cells > cell_limit {
                return Err(Error::TruncationTooLarge {
                    cells,
                    limit: cell_limit,
                });
            }
            pivots.insert(lead, row);
        }

        let closure_rank = pivots.len();
        let bound = code.words_up_to(target_degree);
        let basis = pivots
            .into_iter()
            .filter(|(lead, _)| *lead < bound)
            .collect();
        Ok(Self {
            n,
            conductor,
            target_degree,
            closure_degree,
            code,
            basis,
            closure_rank,
            products,
        })
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    pub fn closure_degree(&self) -> usize {
        self.closure_degree
    }

    /// Rank of the ideal's degree-`<= d` part found so far.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Rank of all products up to the closure degree.
    pub fn closure_rank(&self) -> usize {
        self.closure_rank
    }

    pub fn product_count(&self) -> usize {
        self.products
    }

    /// `dim span{words of degree <= d}` minus the rank of the truncated ideal.
    pub fn quotient_dimension(&self) -> usize {
        self.code.words_up_to(self.target_degree) as usize - self.rank()
    }

    /// The basis as polynomials, sorted by leading monomial.
    pub fn basis(&self) -> Vec<NCPolynomial> {
        let mut leads: Vec<&u64> = self.basis.keys().collect();
        leads.sort();
        leads
            .into_iter()
            .map(|l| self.row_to_poly(&self.basis[l]))
            .collect()
    }

    fn row_to_poly(&self, row: &Row) -> NCPolynomial {
        let mut p = NCPolynomial::zero();
        for (k, c) in row {
            p.add_term(self.code.decode(*k), c.clone());
        }
        p
    }

    fn poly_to_row(&self, p: &NCPolynomial) -> Result<Row> {
        if let Some(d) = p.degree() {
            if d > self.target_degree {
                return Err(Error::DegreeExceedsTruncation {
                    degree: d,
                    target: self.target_degree,
                });
            }
        }
        if let Some(g) = p
            .terms()
            .flat_map(|(m, _)| m.letters())
            .find(|g| g.row as usize >= self.n || g.col as usize >= self.n)
        {
            return Err(Error::InvalidParameter(format!(
                "generator a[{},{}] outside a {}x{} truncation",
                g.row + 1,
                g.col + 1,
                self.n,
                self.n
            )));
        }
        let mut row: Row = p
            .terms()
            .map(|(m, c)| (self.code.encode(m.letters()), c.clone()))
            .collect();
        row.sort_unstable_by_key(|e| std::cmp::Reverse(e.0));
        Ok(row)
    }

    /// Fully reduces `row` against the basis; the remainder is supported on
    /// non-leading monomials and is zero iff `row` lies in the span.
    fn reduce_row(&self, mut row: Row) -> Row {
        let mut i = 0;
        while i < row.len() {
            match self.basis.get(&row[i].0) {
                Some(p) => {
                    let c = row[i].1.clone();
                    row = sub_scaled(&row, &c, p);
                }
                None => i += 1,
            }
        }
        row
    }

    /// Canonical remainder of `p` modulo the truncated ideal.
    pub fn normal_form(&self, p: &NCPolynomial) -> Result<NCPolynomial> {
        let row = self.poly_to_row(p)?;
        Ok(self.row_to_poly(&self.reduce_row(row)))
    }

    pub fn reduces_to_zero(&self, p: &NCPolynomial) -> Result<Verdict> {
        let row = self.poly_to_row(p)?;
        Ok(if self.reduce_row(row).is_empty() {
            Verdict::InIdeal
        } else {
            Verdict::NotInIdealUpToClosure {
                closure_degree: self.closure_degree,
            }
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

/// All words of the given length, in increasing order.
fn all_words(n: usize, len: usize) -> Vec<Vec<Generator>> {
    let letters: Vec<Generator> = (0..n)
        .flat_map(|i| (0..n).map(move |j| Generator::new(i, j)))
        .collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |g| {
                    let mut w2 = w.clone();
                    w2.push(*g);
                    w2
                })
            })
            .collect();
    }
    out
}
