//! The defining relations of B(E) and the antipode on generators.

use super::poly::NCPolynomial;
use crate::arith::CycloNumber;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// The generator matrix `a = (a_ij)`.
pub fn generator_matrix(n: usize) -> Vec<Vec<NCPolynomial>> {
    (0..n)
        .map(|i| (0..n).map(|j| NCPolynomial::generator(i, j)).collect())
        .collect()
}

fn matmul(a: &[Vec<NCPolynomial>], b: &[Vec<NCPolynomial>]) -> Vec<Vec<NCPolynomial>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(NCPolynomial::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn scalars(m: &ExactMatrix) -> Vec<Vec<NCPolynomial>> {
    m.rows()
        .map(|r| {
            r.iter()
                .map(|c| NCPolynomial::constant(c.clone()))
                .collect()
        })
        .collect()
}

fn transpose(a: &[Vec<NCPolynomial>]) -> Vec<Vec<NCPolynomial>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[j][i].clone()).collect())
        .collect()
}

fn check_size(e: &ExactMatrix) -> Result<()> {
    if e.size() < 2 {
        return Err(Error::UnsupportedSize {
            size: e.size(),
            reason: "B(E) analysis needs n >= 2".into(),
            guard: false,
        });
    }
    Ok(())
}

/// `S(a) = E^{-1} a^t E` as an `n x n` matrix of degree-1 polynomials.
pub fn antipode_images(e: &ExactMatrix) -> Result<Vec<Vec<NCPolynomial>>> {
    let inv = e.inverse()?;
    let a = generator_matrix(e.size());
    Ok(matmul(&matmul(&scalars(&inv), &transpose(&a)), &scalars(e)))
}

/// Entries of `E^{-1} a^t E a - I` followed by those of `a E^{-1} a^t E - I`,
/// each family in row-major order: `2 n^2` polynomials.
pub fn build_relations(e: &ExactMatrix) -> Result<Vec<NCPolynomial>> {
    check_size(e)?;
    let n = e.size();
    let m = e.conductor();
    let a = generator_matrix(n);
    let s = antipode_images(e)?;
    let first = matmul(&s, &a);
    let second = matmul(&a, &s);
    let mut out = Vec::with_capacity(2 * n * n);
    for family in [first, second] {
        for (i, row) in family.into_iter().enumerate() {
            for (j, mut p) in row.into_iter().enumerate() {
                if i == j {
                    p.add_term(Default::default(), CycloNumber::from_int(m, -1));
                }
                out.push(p);
            }
        }
    }
    Ok(out)
}
