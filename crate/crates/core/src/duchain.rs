//! Duchain complexes: a graded module with two independent differentials,
//! b of degree -1 and d of degree +1. No compatibility between b and d is
//! assumed.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::CoefficientRing;

#[derive(Debug, Clone)]
pub struct DuchainComplex {
    pub ring: CoefficientRing,
    pub n_max: usize,
    pub ranks: Vec<usize>,
    /// b_list[k] = b_{k+1} : V_{k+1} -> V_k, for k + 1 <= n_max
    b_list: Vec<Matrix>,
    /// d_list[k] = d_k : V_k -> V_{k+1}, for k < n_max
    d_list: Vec<Matrix>,
}

impl DuchainComplex {
    pub fn new(
        ring: CoefficientRing,
        n_max: usize,
        ranks: Vec<usize>,
        b_list: Vec<Matrix>,
        d_list: Vec<Matrix>,
    ) -> Result<Self> {
        if ranks.len() != n_max + 1 || b_list.len() != n_max || d_list.len() != n_max {
            return Err(Error::ShapeMismatch(format!(
                "duchain tables must have {} ranks and {} differentials each",
                n_max + 1,
                n_max
            )));
        }
        for (k, b) in b_list.iter().enumerate() {
            b.check_shape(ranks[k], ranks[k + 1], &format!("b_{}", k + 1))?;
        }
        for (k, d) in d_list.iter().enumerate() {
            d.check_shape(ranks[k + 1], ranks[k], &format!("d_{k}"))?;
        }
        let v = DuchainComplex {
            ring,
            n_max,
            ranks,
            b_list,
            d_list,
        };
        for n in 2..=n_max {
            if !v.b(n - 1).mul(&v.b(n)).is_zero() {
                return Err(Error::InvalidDuchain(format!("b_{} b_{} != 0", n - 1, n)));
            }
        }
        for n in 0..n_max.saturating_sub(1) {
            if !v.d(n + 1).mul(&v.d(n)).is_zero() {
                return Err(Error::InvalidDuchain(format!("d_{} d_{} != 0", n + 1, n)));
            }
        }
        Ok(v)
    }

    /// b_n for 1 <= n <= n_max; b_0 is the zero map into degree -1.
    pub fn b(&self, n: usize) -> Matrix {
        if n == 0 {
            Matrix::zeros(self.ring, 0, self.ranks[0])
        } else {
            self.b_list[n - 1].clone()
        }
    }

    /// d_n for 0 <= n < n_max.
    pub fn d(&self, n: usize) -> Matrix {
        self.d_list[n].clone()
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    pub fn b_matrices(&self) -> &[Matrix] {
        &self.b_list
    }

    pub fn d_matrices(&self) -> &[Matrix] {
        &self.d_list
    }

    /// A chain complex (b only, d = 0).
    pub fn from_chain(
        ring: CoefficientRing,
        n_max: usize,
        ranks: Vec<usize>,
        b_list: Vec<Matrix>,
    ) -> Result<Self> {
        let d_list = (0..n_max)
            .map(|k| Matrix::zeros(ring, ranks[k + 1], ranks[k]))
            .collect();
        DuchainComplex::new(ring, n_max, ranks, b_list, d_list)
    }
}
