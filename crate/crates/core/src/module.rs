//! Truncated simplicial/duplicial/paracyclic modules as matrix data.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{CoefficientRing, Scalar};

/// A module truncated at degree `n_max`, given by the matrices of its
/// structure maps. Faces `face[n][i]` are rank_{n-1} x rank_n for
/// 1 <= n <= n_max and 0 <= i <= n. Degeneracies `degen[n][i]` are
/// rank_{n+1} x rank_n for 0 <= n < n_max; a duplicial module carries the
/// extra degeneracy i = n+1, a plain simplicial one stops at i = n.
/// `t[n]`, when stored, is the action of the cyclic shift on degree n;
/// when absent it is derived as face[n+1][0] * degen[n][n+1].
#[derive(Debug, Clone)]
pub struct TruncatedDuplicialModule {
    pub ring: CoefficientRing,
    pub n_max: usize,
    pub ranks: Vec<usize>,
    pub face: Vec<Vec<Matrix>>,
    pub degen: Vec<Vec<Matrix>>,
    pub t: Vec<Option<Matrix>>,
    pub t_inv: Vec<Option<Matrix>>,
}

/// An element of M_n as a coordinate column vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub degree: usize,
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn zero(ring: CoefficientRing, degree: usize, rank: usize) -> Self {
        Element {
            degree,
            coords: vec![ring.zero(); rank],
        }
    }

    pub fn is_zero(&self, ring: &CoefficientRing) -> bool {
        self.coords.iter().all(|c| ring.is_zero(c))
    }
}

impl TruncatedDuplicialModule {
    /// Validates all shapes; structural relations are checked separately by
    /// the relation suite.
    pub fn new(
        ring: CoefficientRing,
        n_max: usize,
        ranks: Vec<usize>,
        face: Vec<Vec<Matrix>>,
        degen: Vec<Vec<Matrix>>,
        t: Vec<Option<Matrix>>,
        t_inv: Vec<Option<Matrix>>,
    ) -> Result<Self> {
        if ranks.len() != n_max + 1 {
            return Err(Error::ShapeMismatch(format!(
                "expected {} ranks, got {}",
                n_max + 1,
                ranks.len()
            )));
        }
        if face.len() != n_max + 1 || degen.len() != n_max + 1 {
            return Err(Error::ShapeMismatch(
                "face/degen tables must have one slot per degree 0..=n_max".into(),
            ));
        }
        if !face[0].is_empty() {
            return Err(Error::ShapeMismatch("degree 0 has no faces".into()));
        }
        for n in 1..=n_max {
            if face[n].len() != n + 1 {
                return Err(Error::ShapeMismatch(format!(
                    "expected {} faces at degree {n}, got {}",
                    n + 1,
                    face[n].len()
                )));
            }
            for (i, m) in face[n].iter().enumerate() {
                m.check_shape(ranks[n - 1], ranks[n], &format!("face[{n}][{i}]"))?;
                if m.ring != ring {
                    return Err(Error::ShapeMismatch(format!("ring mismatch in face[{n}][{i}]")));
                }
            }
        }
        for n in 0..n_max {
            let len = degen[n].len();
            if len != n + 1 && len != n + 2 {
                return Err(Error::ShapeMismatch(format!(
                    "expected {} or {} degeneracies at degree {n}, got {len}",
                    n + 1,
                    n + 2
                )));
            }
            for (i, m) in degen[n].iter().enumerate() {
                m.check_shape(ranks[n + 1], ranks[n], &format!("degen[{n}][{i}]"))?;
                if m.ring != ring {
                    return Err(Error::ShapeMismatch(format!("ring mismatch in degen[{n}][{i}]")));
                }
            }
        }
        if !degen[n_max].is_empty() {
            return Err(Error::ShapeMismatch(
                "degeneracies out of the top degree are beyond the truncation".into(),
            ));
        }
        if t.len() != n_max + 1 || t_inv.len() != n_max + 1 {
            return Err(Error::ShapeMismatch("t/t_inv tables must cover 0..=n_max".into()));
        }
        for n in 0..=n_max {
            if let Some(m) = &t[n] {
                m.check_shape(ranks[n], ranks[n], &format!("t[{n}]"))?;
            }
            if let Some(m) = &t_inv[n] {
                m.check_shape(ranks[n], ranks[n], &format!("t_inv[{n}]"))?;
            }
        }
        Ok(TruncatedDuplicialModule {
            ring,
            n_max,
            ranks,
            face,
            degen,
            t,
            t_inv,
        })
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    /// True when every degree below the truncation carries the extra
    /// degeneracy, i.e. the data is duplicial rather than just simplicial.
    pub fn has_extra_degeneracies(&self) -> bool {
        (0..self.n_max).all(|n| self.degen[n].len() == n + 2)
    }

    pub fn face_at(&self, n: usize, i: usize) -> Result<&Matrix> {
        if n == 0 || n > self.n_max {
            return Err(Error::DegreeOutOfRange {
                what: "face",
                degree: n,
                n_max: self.n_max,
            });
        }
        self.face[n].get(i).ok_or(Error::IndexOutOfRange {
            what: "face",
            degree: n,
            index: i as isize,
        })
    }

    pub fn degen_at(&self, n: usize, i: usize) -> Result<&Matrix> {
        if n >= self.n_max {
            return Err(Error::DegreeOutOfRange {
                what: "degeneracy",
                degree: n,
                n_max: self.n_max,
            });
        }
        self.degen[n].get(i).ok_or(Error::IndexOutOfRange {
            what: "degeneracy",
            degree: n,
            index: i as isize,
        })
    }

    /// t_n: the stored matrix if present, else derived via the relation
    /// t_n = face[n+1][0] * degen[n][n+1] (which needs degree n+1).
    pub fn t_at(&self, n: usize) -> Result<Matrix> {
        if n > self.n_max {
            return Err(Error::DegreeOutOfRange {
                what: "t",
                degree: n,
                n_max: self.n_max,
            });
        }
        if let Some(m) = &self.t[n] {
            return Ok(m.clone());
        }
        if n < self.n_max && self.degen[n].len() == n + 2 {
            Ok(self.face[n + 1][0].mul(&self.degen[n][n + 1]))
        } else {
            Err(Error::TNotAvailable { degree: n })
        }
    }

    pub fn element_from_i64(&self, degree: usize, coords: &[i64]) -> Element {
        Element {
            degree,
            coords: coords.iter().map(|&v| self.ring.from_i64(v)).collect(),
        }
    }

    /// Re-expresses all structure matrices in another coefficient ring via
    /// integer lifts. Only meaningful for matrices with integral entries.
    pub fn cast(&self, ring: CoefficientRing) -> Result<Self> {
        let cast_all = |tables: &Vec<Vec<Matrix>>| -> Result<Vec<Vec<Matrix>>> {
            tables
                .iter()
                .map(|row| row.iter().map(|m| m.cast(ring)).collect())
                .collect()
        };
        let cast_opt = |tables: &Vec<Option<Matrix>>| -> Result<Vec<Option<Matrix>>> {
            tables
                .iter()
                .map(|m| m.as_ref().map(|m| m.cast(ring)).transpose())
                .collect()
        };
        Ok(TruncatedDuplicialModule {
            ring,
            n_max: self.n_max,
            ranks: self.ranks.clone(),
            face: cast_all(&self.face)?,
            degen: cast_all(&self.degen)?,
            t: cast_opt(&self.t)?,
            t_inv: cast_opt(&self.t_inv)?,
        })
    }
}
