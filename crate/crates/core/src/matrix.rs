//! Dense square matrices over Q(zeta_m).

use std::fmt;

use serde::Serialize;

use crate::arith::poly::lcm;
use crate::arith::{is_root_of_unity, CycloNumber};
use crate::error::{Error, Result};

/// An `n x n` matrix whose entries share one conductor.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    size: usize,
    conductor: u64,
    entries: Vec<CycloNumber>,
}

impl ExactMatrix {
    /// Builds a matrix from rows, promoting every entry to the common
    /// conductor (at least `conductor`).
    pub fn from_rows(conductor: u64, rows: Vec<Vec<CycloNumber>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::UnsupportedShape("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::UnsupportedShape(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let m = rows
            .iter()
            .flatten()
            .fold(conductor, |acc, x| lcm(acc, x.conductor()));
        let entries = rows.into_iter().flatten().map(|x| x.promote(m)).collect();
        Ok(Self {
            size: n,
            conductor: m,
            entries,
        })
    }

    fn from_fn(
        size: usize,
        conductor: u64,
        mut f: impl FnMut(usize, usize) -> CycloNumber,
    ) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j).promote(conductor));
            }
        }
        Self {
            size,
            conductor,
            entries,
        }
    }

    pub fn identity(size: usize, conductor: u64) -> Self {
        Self::scalar(size, &CycloNumber::one(conductor))
    }

    pub fn scalar(size: usize, value: &CycloNumber) -> Self {
        let m = value.conductor();
        Self::from_fn(size, m, |i, j| {
            if i == j {
                value.clone()
            } else {
                CycloNumber::zero(m)
            }
        })
    }

    fn common_conductor(values: &[CycloNumber]) -> u64 {
        values.iter().fold(1, |acc, x| lcm(acc, x.conductor()))
    }

    /// `D(a_1, ..., a_n)`.
    pub fn diag(values: &[CycloNumber]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter(
                "diag() needs at least one value".into(),
            ));
        }
        let m = Self::common_conductor(values);
        Ok(Self::from_fn(values.len(), m, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                CycloNumber::zero(m)
            }
        }))
    }

    /// `AD(a_1, ..., a_n)`: anti-diagonal with `a_1` bottom-left and `a_n`
    /// top-right.
    pub fn antidiag(values: &[CycloNumber]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter(
                "antidiag() needs at least one value".into(),
            ));
        }
        if values.iter().any(CycloNumber::is_zero) {
            return Err(Error::SingularMatrix);
        }
        let n = values.len();
        let m = Self::common_conductor(values);
        Ok(Self::from_fn(n, m, |i, j| {
            if i + j == n - 1 {
                values[n - 1 - i].clone()
            } else {
                CycloNumber::zero(m)
            }
        }))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Entry at row `i`, column `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> &CycloNumber {
        &self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[CycloNumber]> {
        self.entries.chunks(self.size)
    }

    /// Re-expresses every entry in Q(zeta_target).
    pub fn promote(&self, target: u64) -> Self {
        Self {
            size: self.size,
            conductor: target,
            entries: self.entries.iter().map(|x| x.promote(target)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, self.conductor, |i, j| self.get(j, i).clone())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::UnsupportedShape(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.size, other.size
            )));
        }
        let m = lcm(self.conductor, other.conductor);
        let (a, b) = (self.promote(m), other.promote(m));
        Ok(Self::from_fn(self.size, m, |i, j| {
            (0..a.size).fold(CycloNumber::zero(m), |acc, k| {
                let (x, y) = (a.get(i, k), b.get(k, j));
                if x.is_zero() || y.is_zero() {
                    acc
                } else {
                    acc + x * y
                }
            })
        }))
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        let m = lcm(self.conductor, c.conductor());
        Self::from_fn(self.size, m, |i, j| self.get(i, j) * c)
    }

    pub fn trace(&self) -> CycloNumber {
        (0..self.size).fold(CycloNumber::zero(self.conductor), |acc, i| {
            acc + self.get(i, i)
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// `Some(lambda)` when the matrix is `lambda * I`.
    pub fn scalar_value(&self) -> Option<CycloNumber> {
        let first = self.get(0, 0);
        (self.is_diagonal() && (1..self.size).all(|i| self.get(i, i) == first))
            .then(|| first.clone())
    }

    pub fn diagonal(&self) -> Vec<CycloNumber> {
        (0..self.size).map(|i| self.get(i, i).clone()).collect()
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> CycloNumber {
        let n = self.size;
        let m = self.conductor;
        let mut a: Vec<Vec<CycloNumber>> = self.rows().map(<[_]>::to_vec).collect();
        let mut prev = CycloNumber::one(m);
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return CycloNumber::zero(m);
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            let prev_inv = prev.inv().expect("Bareiss pivot is nonzero");
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &num * &prev_inv;
                }
                a[i][k] = CycloNumber::zero(m);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Inverse by fraction-free Gauss-Jordan elimination on `[M | I]`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.size;
        let m = self.conductor;
        let mut rows: Vec<Vec<CycloNumber>> = self
            .rows()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        CycloNumber::one(m)
                    } else {
                        CycloNumber::zero(m)
                    }
                }));
                row
            })
            .collect();
        let mut prev = CycloNumber::one(m);
        for k in 0..n {
            let p = (k..n)
                .find(|&r| !rows[r][k].is_zero())
                .ok_or(Error::SingularMatrix)?;
            rows.swap(p, k);
            let prev_inv = prev.inv()?;
            let pivot_row = rows[k].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let factor = row[k].clone();
                for j in 0..2 * n {
                    if j == k {
                        continue;
                    }
                    let num = &(&pivot_row[k] * &row[j]) - &(&factor * &pivot_row[j]);
                    row[j] = &num * &prev_inv;
                }
                row[k] = CycloNumber::zero(m);
            }
            prev = pivot_row[k].clone();
        }
        // the left block is now diagonal; scale each row by its diagonal entry
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let d = row[i].inv().map_err(|_| Error::SingularMatrix)?;
            entries.extend(row[n..].iter().map(|x| x * &d));
        }
        Ok(Self {
            size: n,
            conductor: m,
            entries,
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.size, self.conductor);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base).expect("same size");
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base).expect("same size");
            }
        }
        acc
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }
}

/// `F = E^{-1} E^t`, the matrix governing the square of the antipode.
pub fn companion(e: &ExactMatrix) -> Result<ExactMatrix> {
    if !e.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    e.inverse()?.multiply(&e.transpose())
}

/// Least `k` with `F^k` scalar, when it can be decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjOrderVerdict {
    /// `F^k = scalar * I` and no smaller positive power is scalar.
    Finite { k: u64, scalar: CycloNumber },
    /// Some diagonal ratio is not a root of unity.
    Infinite { witness: String },
    /// Non-diagonal input: no scalar power up to `bound_reached`.
    Unknown { bound_reached: u64 },
}

/// Projective order of `F`: exact for diagonal `F`, bounded search otherwise.
pub fn projective_order(f: &ExactMatrix, max_k: u64) -> Result<ProjOrderVerdict> {
    if f.is_diagonal() {
        let diag = f.diagonal();
        if diag.iter().any(CycloNumber::is_zero) {
            return Err(Error::SingularMatrix);
        }
        let first_inv = diag[0].inv()?;
        let mut k = 1;
        for (i, d) in diag.iter().enumerate().skip(1) {
            let ratio = d * &first_inv;
            match is_root_of_unity(&ratio)? {
                Some(order) => k = lcm(k, order),
                None => {
                    return Ok(ProjOrderVerdict::Infinite {
                        witness: format!("F[{0}][{0}]/F[1][1] = {ratio}", i + 1),
                    })
                }
            }
        }
        return Ok(ProjOrderVerdict::Finite {
            k,
            scalar: diag[0].pow(k),
        });
    }
    if !f.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let mut power = f.clone();
    for k in 1..=max_k {
        if let Some(scalar) = power.scalar_value() {
            return Ok(ProjOrderVerdict::Finite { k, scalar });
        }
        power = power.multiply(f)?;
    }
    Ok(ProjOrderVerdict::Unknown {
        bound_reached: max_k,
    })
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix(m={}) [", self.conductor)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(CycloNumber::to_z_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
