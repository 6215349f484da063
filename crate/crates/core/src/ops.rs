//! The operators a duplicial module carries, computed as matrices.
//!
//! `Ops` wraps a module and memoizes everything it computes; the cache is
//! write-once per key, so results are independent of call order.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::TruncatedDuplicialModule;
use crate::ring::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Key {
    B(usize),
    D(usize),
    Kappa(usize),
    KappaPow(usize, usize),
    Pi(usize),
    P(usize, usize),
    Phi(usize),
    ConnesB(usize),
    GsD(usize),
    T(usize),
    BigT(usize),
}

pub struct Ops<'a> {
    pub module: &'a TruncatedDuplicialModule,
    cache: HashMap<Key, Matrix>,
}

impl<'a> Ops<'a> {
    pub fn new(module: &'a TruncatedDuplicialModule) -> Self {
        Ops {
            module,
            cache: HashMap::new(),
        }
    }

    pub fn sign(&self, k: usize) -> Scalar {
        if k % 2 == 0 {
            self.module.ring.one()
        } else {
            self.module.ring.from_i64(-1)
        }
    }

    pub fn identity(&self, n: usize) -> Matrix {
        Matrix::identity(self.module.ring, self.module.ranks[n])
    }

    fn out_of_range(&self, what: &'static str, degree: usize) -> Error {
        Error::DegreeOutOfRange {
            what,
            degree,
            n_max: self.module.n_max,
        }
    }

    fn memo(
        &mut self,
        key: Key,
        compute: impl FnOnce(&mut Self) -> Result<Matrix>,
    ) -> Result<Matrix> {
        if let Some(m) = self.cache.get(&key) {
            return Ok(m.clone());
        }
        let m = compute(self)?;
        self.cache.insert(key, m.clone());
        Ok(m)
    }

    /// b_n = sum_{i=0}^n (-1)^i face_{n,i}; b_0 is the zero map into the
    /// rank-0 module in degree -1.
    pub fn b(&mut self, n: usize) -> Result<Matrix> {
        let module = self.module;
        if n > module.n_max {
            return Err(self.out_of_range("b", n));
        }
        self.memo(Key::B(n), |ops| {
            if n == 0 {
                return Ok(Matrix::zeros(ops.module.ring, 0, ops.module.ranks[0]));
            }
            let mut acc = ops.module.face[n][0].clone();
            for i in 1..=n {
                let term = ops.module.face[n][i].scale(&ops.sign(i));
                acc = acc.add(&term);
            }
            Ok(acc)
        })
    }

    /// d_n = sum_{i=0}^{n+1} (-1)^i s_{n,i}, defined below the truncation.
    pub fn d(&mut self, n: usize) -> Result<Matrix> {
        let module = self.module;
        if n >= module.n_max {
            return Err(self.out_of_range("d", n));
        }
        if module.degen[n].len() < n + 2 {
            return Err(Error::ShapeMismatch(format!(
                "d_{n} needs the extra degeneracy; the module is simplicial at degree {n}"
            )));
        }
        self.memo(Key::D(n), |ops| {
            let mut acc = ops.module.degen[n][0].clone();
            for i in 1..=n + 1 {
                let term = ops.module.degen[n][i].scale(&ops.sign(i));
                acc = acc.add(&term);
            }
            Ok(acc)
        })
    }

    /// The zero map out of the rank-0 module in degree -1.
    pub fn d_minus_one(&self) -> Matrix {
        Matrix::zeros(self.module.ring, self.module.ranks[0], 0)
    }

    /// delta_n = face_{n,0}
    pub fn delta(&self, n: usize) -> Result<Matrix> {
        Ok(self.module.face_at(n, 0)?.clone())
    }

    /// sigma_n = (-1)^n s_{n,n+1}
    pub fn sigma(&mut self, n: usize) -> Result<Matrix> {
        if n >= self.module.n_max || self.module.degen[n].len() < n + 2 {
            return Err(self.out_of_range("sigma", n));
        }
        let s = self.module.degen[n][n + 1].clone();
        Ok(s.scale(&self.sign(n)))
    }

    pub fn t(&mut self, n: usize) -> Result<Matrix> {
        self.memo(Key::T(n), |ops| ops.module.t_at(n))
    }

    /// T_n = t_n^{n+1}
    pub fn big_t(&mut self, n: usize) -> Result<Matrix> {
        let t = self.t(n)?;
        self.memo(Key::BigT(n), |_| Ok(t.pow(n + 1)))
    }

    /// Karoubi operator, by its defining formula
    /// kappa_n = (-1)^n (face_{n+1,0} s_{n,n+1} - s_{n-1,n} face_{n,0});
    /// the second term is absent at n = 0.
    pub fn kappa(&mut self, n: usize) -> Result<Matrix> {
        let module = self.module;
        if n >= module.n_max || module.degen[n].len() < n + 2 {
            return Err(self.out_of_range("kappa", n));
        }
        self.memo(Key::Kappa(n), |ops| {
            let first = ops.module.face[n + 1][0].mul(&ops.module.degen[n][n + 1]);
            let combined = if n == 0 {
                first
            } else {
                let second = ops.module.degen[n - 1][n].mul(&ops.module.face[n][0]);
                first.sub(&second)
            };
            Ok(combined.scale(&ops.sign(n)))
        })
    }

    /// kappa_n = 1 - b_{n+1} d_n - d_{n-1} b_n, with the degree-0
    /// conventions b_0 = 0 and d_{-1} = 0. Used as a cross-check.
    pub fn kappa_via_differentials(&mut self, n: usize) -> Result<Matrix> {
        if n >= self.module.n_max {
            return Err(self.out_of_range("kappa", n));
        }
        let mut acc = self.identity(n);
        acc = acc.sub(&self.b(n + 1)?.mul(&self.d(n)?));
        if n > 0 {
            acc = acc.sub(&self.d(n - 1)?.mul(&self.b(n)?));
        }
        Ok(acc)
    }

    pub fn kappa_pow(&mut self, n: usize, k: usize) -> Result<Matrix> {
        let kappa = self.kappa(n)?;
        self.memo(Key::KappaPow(n, k), |_| Ok(kappa.pow(k)))
    }

    /// Dwyer-Kan operator via pi_n = kappa_n^n - b_{n+1} kappa_n^n d_n,
    /// which only needs degrees n and n+1. The middle factor commutes past
    /// d (d kappa_n = kappa_{n+1} d), so the composable reading is
    /// b_{n+1} ∘ d_n ∘ kappa_n^n.
    pub fn pi(&mut self, n: usize) -> Result<Matrix> {
        if n >= self.module.n_max {
            return Err(self.out_of_range("pi", n));
        }
        let kpow = self.kappa_pow(n, n)?;
        let b = self.b(n + 1)?;
        let d = self.d(n)?;
        self.memo(Key::Pi(n), |_| Ok(kpow.sub(&b.mul(&d).mul(&kpow))))
    }

    /// The defining formula pi_n = (-1)^n face_{n+1,0} kappa_{n+1}^n s_{n,n+1};
    /// needs degree n + 2, so it serves as a cross-check below the boundary.
    pub fn pi_via_definition(&mut self, n: usize) -> Result<Matrix> {
        if n + 1 >= self.module.n_max {
            return Err(self.out_of_range("pi (defining formula)", n));
        }
        let kpow = self.kappa_pow(n + 1, n)?;
        let del = self.module.face[n + 1][0].clone();
        let s = self.module.degen[n][n + 1].clone();
        Ok(del.mul(&kpow).mul(&s).scale(&self.sign(n)))
    }

    /// pi_n = (1 - b_{n+1} d_n)^{n+1} (1 - d_{n-1} b_n)^n
    pub fn pi_factored(&mut self, n: usize) -> Result<Matrix> {
        if n >= self.module.n_max {
            return Err(self.out_of_range("pi (factored)", n));
        }
        let one = self.identity(n);
        let left = one.sub(&self.b(n + 1)?.mul(&self.d(n)?)).pow(n + 1);
        let right = if n == 0 {
            self.identity(0)
        } else {
            one.sub(&self.d(n - 1)?.mul(&self.b(n)?)).pow(n)
        };
        Ok(left.mul(&right))
    }

    /// Dold-Puppe operator
    /// p_{n,i} = (1 - s_{n-1,i} face_{n,i+1}) ... (1 - s_{n-1,n-1} face_{n,n});
    /// the empty product at i = n is the identity.
    pub fn p_partial(&mut self, n: usize, i: usize) -> Result<Matrix> {
        if n > self.module.n_max {
            return Err(self.out_of_range("p", n));
        }
        if i > n {
            return Err(Error::IndexOutOfRange {
                what: "p",
                degree: n,
                index: i as isize,
            });
        }
        self.memo(Key::P(n, i), |ops| {
            let one = ops.identity(n);
            let mut acc = one.clone();
            for j in i..n {
                let factor = one.sub(&ops.module.degen[n - 1][j].mul(&ops.module.face[n][j + 1]));
                acc = acc.mul(&factor);
            }
            Ok(acc)
        })
    }

    /// p_n = p_{n,0}, the projection onto the normalized chains.
    pub fn p(&mut self, n: usize) -> Result<Matrix> {
        self.p_partial(n, 0)
    }

    /// Eilenberg-MacLane homotopy phi_n = sum_i (-1)^i s_{n,i} p_{n,i}.
    pub fn phi(&mut self, n: usize) -> Result<Matrix> {
        if n >= self.module.n_max {
            return Err(self.out_of_range("phi", n));
        }
        self.memo(Key::Phi(n), |ops| {
            let mut acc = Matrix::zeros(ops.module.ring, ops.module.ranks[n + 1], ops.module.ranks[n]);
            for i in 0..=n {
                let term = ops.module.degen[n][i].mul(&ops.p_partial(n, i)?);
                acc = acc.add(&term.scale(&ops.sign(i)));
            }
            Ok(acc)
        })
    }

    /// Connes operator B_n = sum_{i=0}^n d_n kappa_n^i.
    pub fn connes_b(&mut self, n: usize) -> Result<Matrix> {
        if n >= self.module.n_max {
            return Err(self.out_of_range("B", n));
        }
        self.memo(Key::ConnesB(n), |ops| {
            let d = ops.d(n)?;
            let mut acc = Matrix::zeros(ops.module.ring, ops.module.ranks[n + 1], ops.module.ranks[n]);
            for i in 0..=n {
                acc = acc.add(&d.mul(&ops.kappa_pow(n, i)?));
            }
            Ok(acc)
        })
    }

    /// Ginzburg-Schedler homotopy D_n = sum_{i=0}^{n-1} b_n kappa_n^i;
    /// D_0 is the zero map into degree -1 (empty sum).
    pub fn gs_d(&mut self, n: usize) -> Result<Matrix> {
        if n >= self.module.n_max {
            return Err(self.out_of_range("D", n));
        }
        self.memo(Key::GsD(n), |ops| {
            if n == 0 {
                return Ok(Matrix::zeros(ops.module.ring, 0, ops.module.ranks[0]));
            }
            let b = ops.b(n)?;
            let mut acc = Matrix::zeros(ops.module.ring, ops.module.ranks[n - 1], ops.module.ranks[n]);
            for i in 0..n {
                acc = acc.add(&b.mul(&ops.kappa_pow(n, i)?));
            }
            Ok(acc)
        })
    }

    /// Pi_{p,q} = (-1)^{q-p} s_{n-1,p} face_{n,q} for 0 <= p < q <= n.
    pub fn pi_pq(&mut self, n: usize, p: usize, q: usize) -> Result<Matrix> {
        if n == 0 || n > self.module.n_max {
            return Err(self.out_of_range("Pi_{p,q}", n));
        }
        if !(p < q && q <= n) {
            return Err(Error::IndexOutOfRange {
                what: "Pi_{p,q}",
                degree: n,
                index: q as isize,
            });
        }
        let m = self.module.degen[n - 1][p].mul(&self.module.face[n][q]);
        Ok(m.scale(&self.sign(q - p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::builtins;
    use crate::ring::CoefficientRing;

    fn ground_ring(n_max: usize) -> TruncatedDuplicialModule {
        builtins::ground_ring(CoefficientRing::Rationals, n_max).unwrap()
    }

    #[test]
    fn ground_ring_differentials_alternate() {
        let m = ground_ring(4);
        let mut ops = Ops::new(&m);
        assert!(ops.b(1).unwrap().is_zero());
        assert!(ops.b(2).unwrap().is_identity());
        assert!(ops.d(0).unwrap().is_zero());
        assert!(ops.d(1).unwrap().is_identity());
    }

    #[test]
    fn ground_ring_small_operators() {
        let m = ground_ring(4);
        let mut ops = Ops::new(&m);
        // kappa_0 = t_0 = 1, kappa_1 = 0
        assert!(ops.kappa(0).unwrap().is_identity());
        assert!(ops.kappa(1).unwrap().is_zero());
        // p_0 = 1, p_1 = 0
        assert!(ops.p(0).unwrap().is_identity());
        assert!(ops.p(1).unwrap().is_zero());
        // pi_0 = t_0, pi_1 = 0
        assert!(ops.pi(0).unwrap().is_identity());
        assert!(ops.pi(1).unwrap().is_zero());
        // phi_0 = s_{0,0}, phi_1 = [-1]
        assert!(ops.phi(0).unwrap().is_identity());
        assert_eq!(ops.phi(1).unwrap(), ops.identity(1).neg());
        // B_0 = d_0 = 0 here; D_0 is the empty sum
        assert!(ops.connes_b(0).unwrap().is_zero());
        assert_eq!(ops.gs_d(0).unwrap().rows, 0);
        // Pi_{0,1} at degree 1 is -s_{0,0} face_{1,1} = [-1]
        assert_eq!(ops.pi_pq(1, 0, 1).unwrap(), ops.identity(1).neg());
    }

    #[test]
    fn degree_bounds_are_enforced() {
        let m = ground_ring(3);
        let mut ops = Ops::new(&m);
        assert!(ops.d(3).is_err());
        assert!(ops.kappa(3).is_err());
        assert!(ops.pi(3).is_err());
        assert!(ops.b(4).is_err());
        assert!(ops.b(3).is_ok());
        assert!(ops.p_partial(3, 3).is_ok());
    }
}
