//! Kernels, ranks and inverses over Z, Q and Z/m.
//!
//! Field computations use Gauss-Jordan elimination; integer computations go
//! through the Smith normal form, so integer kernels come back as bases of
//! the full kernel lattice.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{CoefficientRing, Scalar};
use crate::snf::smith_normal_form;

/// Reduced row echelon form over a field, returning the pivot columns.
pub fn rref(m: &Matrix) -> Result<(Matrix, Vec<usize>)> {
    let ring = m.ring;
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row >= a.rows {
            break;
        }
        // unit pivot search; over a field every nonzero entry qualifies
        let found = (row..a.rows).find(|&r| ring.is_unit(a.get(r, col)));
        let Some(pr) = found else {
            if let CoefficientRing::Mod(modulus) = ring {
                if let Some(r) = (row..a.rows).find(|&r| !ring.is_zero(a.get(r, col))) {
                    let pivot = match a.get(r, col) {
                        Scalar::Mod(v) => *v,
                        _ => unreachable!(),
                    };
                    return Err(Error::CompositeModulus { modulus, pivot });
                }
            }
            continue;
        };
        if pr != row {
            for j in 0..a.cols {
                let tmp = a.get(row, j).clone();
                a.set(row, j, a.get(pr, j).clone());
                a.set(pr, j, tmp);
            }
        }
        let inv = ring.inv(a.get(row, col)).unwrap();
        for j in 0..a.cols {
            let v = ring.mul(a.get(row, j), &inv);
            a.set(row, j, v);
        }
        for r in 0..a.rows {
            if r == row || ring.is_zero(a.get(r, col)) {
                continue;
            }
            let f = a.get(r, col).clone();
            for j in 0..a.cols {
                let v = ring.sub(a.get(r, j), &ring.mul(&f, a.get(row, j)));
                a.set(r, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Ok((a, pivots))
}

/// Rank of a matrix over Q, Z/p, or Z (free rank via SNF).
pub fn rank(m: &Matrix) -> Result<usize> {
    match m.ring {
        CoefficientRing::Integers => Ok(smith_normal_form(m).rank()),
        _ => Ok(rref(m)?.1.len()),
    }
}

/// A basis of `ker m` as column vectors.
///
/// Over a field this is the usual null space; over Z it is a basis of the
/// full kernel lattice (kernels of integer matrices are saturated, so the
/// basis extends to a basis of the ambient lattice when the kernel is a
/// summand). Over Z/m with m composite the elimination may hit a
/// non-invertible pivot and reports it.
pub fn kernel_basis(m: &Matrix) -> Result<Vec<Vec<Scalar>>> {
    match m.ring {
        CoefficientRing::Integers => {
            let snf = smith_normal_form(m);
            let r = snf.rank();
            Ok((r..m.cols).map(|j| snf.v.column(j)).collect())
        }
        _ => {
            let ring = m.ring;
            let (r, pivots) = rref(m)?;
            let mut basis = Vec::new();
            let pivot_of_col: Vec<Option<usize>> = {
                let mut v = vec![None; m.cols];
                for (row, &col) in pivots.iter().enumerate() {
                    v[col] = Some(row);
                }
                v
            };
            for free in 0..m.cols {
                if pivot_of_col[free].is_some() {
                    continue;
                }
                let mut vec = vec![ring.zero(); m.cols];
                vec[free] = ring.one();
                for (col, pr) in pivot_of_col.iter().enumerate() {
                    if let Some(row) = pr {
                        vec[col] = ring.neg(r.get(*row, free));
                    }
                }
                basis.push(vec);
            }
            Ok(basis)
        }
    }
}

/// Inverse of a square matrix. Over Z this succeeds exactly when the
/// determinant is a unit; the error carries a determinant or rank witness.
pub fn invert(m: &Matrix) -> Result<Matrix> {
    if m.rows != m.cols {
        return Err(Error::ShapeMismatch(format!(
            "invert of non-square {}x{}",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    match m.ring {
        CoefficientRing::Rationals => invert_field(m),
        CoefficientRing::Mod(modulus) => {
            // lift to Z and invert the invariant factors mod m
            let lifted = m.cast(CoefficientRing::Integers)?;
            let snf = smith_normal_form(&lifted);
            if snf.rank() < n {
                return Err(Error::NotInvertible {
                    witness: format!("rank {} < {}", snf.rank(), n),
                });
            }
            let ring = m.ring;
            let mut s_inv = Matrix::zeros(ring, n, n);
            for i in 0..n {
                let d = ring.from_bigint(match snf.s.get(i, i) {
                    Scalar::Int(v) => v,
                    _ => unreachable!(),
                });
                let inv = ring.inv(&d).ok_or_else(|| Error::NotInvertible {
                    witness: format!(
                        "invariant factor {} is not a unit mod {modulus}",
                        ring.format(&d)
                    ),
                })?;
                s_inv.set(i, i, inv);
            }
            let v = snf.v.cast(ring)?;
            let u = snf.u.cast(ring)?;
            Ok(v.mul(&s_inv).mul(&u))
        }
        CoefficientRing::Integers => {
            let snf = smith_normal_form(m);
            if snf.rank() < n {
                return Err(Error::NotInvertible {
                    witness: format!("rank {} < {}", snf.rank(), n),
                });
            }
            let factors = snf.invariant_factors();
            if let Some(bad) = factors.iter().find(|d| !d.is_one()) {
                let det: BigInt = factors.iter().product();
                return Err(Error::NotInvertible {
                    witness: format!("det = ±{det}, invariant factor {bad}"),
                });
            }
            // u m v = 1 so m^{-1} = v u
            Ok(snf.v.mul(&snf.u))
        }
    }
}

fn invert_field(m: &Matrix) -> Result<Matrix> {
    let ring = m.ring;
    let n = m.rows;
    let aug = m.hstack(&Matrix::identity(ring, n));
    let (r, pivots) = rref(&aug)?;
    if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
        return Err(Error::NotInvertible {
            witness: format!("rank {} < {}", pivots.iter().filter(|&&p| p < n).count(), n),
        });
    }
    Ok(Matrix::from_fn(ring, n, n, |i, j| r.get(i, j + n).clone()))
}

/// Solves `a x = b` for square invertible `a` (used to express vectors in a
/// basis given by the columns of `a`).
pub fn solve_square(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    Ok(invert(a)?.mul(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(ring: CoefficientRing, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows_i64(ring, rows)
    }

    #[test]
    fn kernel_over_q_is_scaled_1_minus_1() {
        let m = mat(CoefficientRing::Rationals, &[&[1, 1]]);
        let basis = kernel_basis(&m).unwrap();
        assert_eq!(basis.len(), 1);
        // proportional to (1, -1)
        let ring = m.ring;
        let v = &basis[0];
        assert_eq!(ring.neg(&v[0]), v[1]);
        assert!(!ring.is_zero(&v[0]));
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let m = Matrix::zeros(CoefficientRing::Rationals, 2, 2);
        assert_eq!(kernel_basis(&m).unwrap().len(), 2);
    }

    #[test]
    fn integer_kernel_of_times_two_is_empty() {
        let m = mat(CoefficientRing::Integers, &[&[2]]);
        assert!(kernel_basis(&m).unwrap().is_empty());
    }

    #[test]
    fn rank_nullity_over_fields() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for ring in [CoefficientRing::Rationals, CoefficientRing::Mod(7)] {
            for _ in 0..40 {
                let rows = rng.gen_range(1..5);
                let cols = rng.gen_range(1..5);
                let m = Matrix::from_fn(ring, rows, cols, |_, _| {
                    ring.from_i64(rng.gen_range(-9i64..=9))
                });
                let r = rank(&m).unwrap();
                let k = kernel_basis(&m).unwrap();
                assert_eq!(r + k.len(), cols);
                for v in &k {
                    assert!(m.mul_vec(v).iter().all(|x| ring.is_zero(x)));
                }
            }
        }
    }

    #[test]
    fn invert_examples() {
        let q = CoefficientRing::Rationals;
        let m = mat(q, &[&[2]]);
        let inv = invert(&m).unwrap();
        assert_eq!(q.format(inv.get(0, 0)), "1/2");

        let z = CoefficientRing::Integers;
        let m = mat(z, &[&[2]]);
        match invert(&m) {
            Err(Error::NotInvertible { witness }) => assert!(witness.contains('2')),
            other => panic!("expected NotInvertible, got {other:?}"),
        }
        assert!(invert(&Matrix::identity(z, 3)).unwrap().is_identity());
    }

    #[test]
    fn invert_mod_composite_when_unimodular() {
        // det = -5 which is a unit mod 6, even though no single entry of
        // the first column is a unit
        let m = mat(CoefficientRing::Mod(6), &[&[2, 3], &[3, 2]]);
        let inv = invert(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn composite_modulus_kernel_reports_pivot() {
        let m = mat(CoefficientRing::Mod(6), &[&[2, 4], &[4, 2]]);
        match kernel_basis(&m) {
            Err(Error::CompositeModulus { modulus: 6, .. }) => {}
            other => panic!("expected CompositeModulus, got {other:?}"),
        }
    }

    #[test]
    fn integer_invert_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let z = CoefficientRing::Integers;
        for _ in 0..20 {
            // build a random unimodular matrix as a product of elementary ones
            let n = rng.gen_range(1..4);
            let mut m = Matrix::identity(z, n);
            for _ in 0..6 {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                if i == j {
                    continue;
                }
                let mut e = Matrix::identity(z, n);
                e.set(i, j, z.from_i64(rng.gen_range(-3i64..=3)));
                m = m.mul(&e);
            }
            let inv = invert(&m).unwrap();
            assert!(m.mul(&inv).is_identity());
            assert!(inv.mul(&m).is_identity());
        }
    }
}
