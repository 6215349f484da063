//! Dense matrices over a [`CoefficientRing`], row-major storage.
//!
//! Operators act on column vectors, so a map M_n -> M_{n-1} is stored as a
//! rank_{n-1} x rank_n matrix and composition is matrix multiplication.

use crate::error::{Error, Result};
use crate::ring::{CoefficientRing, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub ring: CoefficientRing,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(ring: CoefficientRing, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            ring,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: CoefficientRing, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_fn(
        ring: CoefficientRing,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            ring,
            entries,
        }
    }

    pub fn from_rows_i64(ring: CoefficientRing, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(ring, r, c, |i, j| ring.from_i64(rows[i][j]))
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.ring.is_one(self.get(i, j))
                    } else {
                        self.ring.is_zero(self.get(i, j))
                    }
                })
            })
    }

    fn assert_same_shape(&self, other: &Matrix, op: &str) {
        assert_eq!(self.ring, other.ring, "ring mismatch in {op}");
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch in {op}: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.assert_same_shape(other, "add");
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = self.ring.add(a, b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.assert_same_shape(other, "sub");
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = self.ring.sub(a, b);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = self.ring.neg(a);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = self.ring.mul(a, c);
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ring, other.ring, "ring mismatch in mul");
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in mul: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let ring = self.ring;
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j);
                    let v = ring.add(cur, &ring.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix power; `pow(0)` is the identity (square matrices only).
    pub fn pow(&self, k: usize) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow of non-square matrix");
        let mut out = Matrix::identity(self.ring, self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        let ring = self.ring;
        (0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for j in 0..self.cols {
                    acc = ring.add(&acc, &ring.mul(self.get(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ring, other.ring);
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn from_columns(ring: CoefficientRing, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(ring, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            m.set_column(j, c);
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Maps entries into another ring through their integer lift.
    pub fn cast(&self, ring: CoefficientRing) -> Result<Matrix> {
        let mut out = Matrix::zeros(ring, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let lifted = self.ring.lift_to_int(self.get(i, j))?;
                out.set(i, j, ring.from_bigint(&lifted));
            }
        }
        Ok(out)
    }

    pub fn check_shape(&self, rows: usize, cols: usize, what: &str) -> Result<()> {
        if self.rows != rows || self.cols != cols {
            return Err(Error::ShapeMismatch(format!(
                "{what}: expected {rows}x{cols}, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.ring.format(self.get(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_and_pow() {
        let q = CoefficientRing::Rationals;
        let a = Matrix::from_rows_i64(q, &[&[1, 1], &[0, 1]]);
        let sq = a.pow(3);
        assert_eq!(sq.get(0, 1), &q.from_i64(3));
        assert!(a.pow(0).is_identity());
    }

    #[test]
    fn zero_dimensional() {
        let z = CoefficientRing::Integers;
        let a = Matrix::zeros(z, 0, 3);
        let b = Matrix::zeros(z, 3, 2);
        let c = a.mul(&b);
        assert_eq!((c.rows, c.cols), (0, 2));
        assert!(c.is_zero());
    }
}
