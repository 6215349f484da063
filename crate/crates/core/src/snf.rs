//! Smith normal form of integer matrices with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::Matrix;
use crate::ring::{CoefficientRing, Scalar};

/// Result of `smith_normal_form`: `u * m * v = s` with `u`, `v` unimodular,
/// `s` diagonal with a nonnegative divisibility chain. The inverse
/// transforms are tracked alongside so callers can change basis both ways.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: Matrix,
    pub s: Matrix,
    pub v: Matrix,
    pub u_inv: Matrix,
    pub v_inv: Matrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        let n = self.s.rows.min(self.s.cols);
        (0..n)
            .take_while(|&i| !self.s.ring.is_zero(self.s.get(i, i)))
            .count()
    }

    /// Nonzero diagonal entries d_1 | d_2 | ...
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows.min(self.s.cols);
        (0..n)
            .filter_map(|i| match self.s.get(i, i) {
                Scalar::Int(d) if !d.is_zero() => Some(d.clone()),
                _ => None,
            })
            .collect()
    }
}

struct Calc {
    m: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

impl Calc {
    fn new(m: Vec<Vec<BigInt>>, rows: usize, cols: usize) -> Self {
        let id = |n: usize| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                        .collect()
                })
                .collect::<Vec<Vec<BigInt>>>()
        };
        Calc {
            m,
            u: id(rows),
            u_inv: id(rows),
            v: id(cols),
            v_inv: id(cols),
            rows,
            cols,
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.m.swap(i, j);
        self.u.swap(i, j);
        for row in self.u_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.m.iter_mut() {
            row.swap(i, j);
        }
        for row in self.v.iter_mut() {
            row.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.m[i].iter_mut() {
            *x = -std::mem::take(x);
        }
        for x in self.u[i].iter_mut() {
            *x = -std::mem::take(x);
        }
        for row in self.u_inv.iter_mut() {
            row[i] = -std::mem::take(&mut row[i]);
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let d = &self.m[j][k] * q;
            self.m[i][k] -= d;
        }
        for k in 0..self.rows {
            let d = &self.u[j][k] * q;
            self.u[i][k] -= d;
            // inverse transform: column j += q * column i
            let d = &self.u_inv[k][i] * q;
            self.u_inv[k][j] += d;
        }
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for row in self.m.iter_mut() {
            let d = &row[j] * q;
            row[i] -= d;
        }
        for row in self.v.iter_mut() {
            let d = &row[j] * q;
            row[i] -= d;
        }
        for k in 0..self.cols {
            // inverse transform: row j += q * row i
            let d = &self.v_inv[i][k] * q;
            self.v_inv[j][k] += d;
        }
    }

    fn find_min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if self.m[i][j].is_zero() {
                    continue;
                }
                let a = self.m[i][j].abs();
                match &best {
                    Some((_, _, b)) if *b <= a => {}
                    _ => best = Some((i, j, a)),
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn process(&mut self) {
        let n = self.rows.min(self.cols);
        for t in 0..n {
            'pivot: loop {
                let Some((pi, pj)) = self.find_min_pivot(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);

                // clear column t below the pivot
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if self.m[i][t].is_zero() {
                        continue;
                    }
                    let q = self.m[i][t].div_floor(&self.m[t][t]);
                    self.row_sub(i, t, &q);
                    if !self.m[i][t].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    continue 'pivot;
                }
                // clear row t right of the pivot
                for j in t + 1..self.cols {
                    if self.m[t][j].is_zero() {
                        continue;
                    }
                    let q = self.m[t][j].div_floor(&self.m[t][t]);
                    self.col_sub(j, t, &q);
                    if !self.m[t][j].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    continue 'pivot;
                }
                // enforce the divisibility chain
                for i in t + 1..self.rows {
                    for j in t + 1..self.cols {
                        if !(&self.m[i][j] % &self.m[t][t]).is_zero() {
                            // pull the offending row up and restart this pivot
                            let minus_one = BigInt::from(-1);
                            self.row_sub(t, i, &minus_one);
                            continue 'pivot;
                        }
                    }
                }
                break;
            }
            if self.m[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

fn to_bigint_grid(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| match m.get(i, j) {
                    Scalar::Int(v) => v.clone(),
                    _ => panic!("smith_normal_form requires integer entries"),
                })
                .collect()
        })
        .collect()
}

fn from_bigint_grid(grid: &[Vec<BigInt>], rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(CoefficientRing::Integers, rows, cols, |i, j| {
        Scalar::Int(grid[i][j].clone())
    })
}

/// Computes `(u, s, v)` with `u * m * v = s`, `u` and `v` unimodular, and
/// `s` diagonal with nonnegative entries satisfying d_1 | d_2 | ...
pub fn smith_normal_form(m: &Matrix) -> Snf {
    assert_eq!(
        m.ring,
        CoefficientRing::Integers,
        "smith_normal_form is defined over Z"
    );
    let mut calc = Calc::new(to_bigint_grid(m), m.rows, m.cols);
    calc.process();
    Snf {
        s: from_bigint_grid(&calc.m, m.rows, m.cols),
        u: from_bigint_grid(&calc.u, m.rows, m.rows),
        u_inv: from_bigint_grid(&calc.u_inv, m.rows, m.rows),
        v: from_bigint_grid(&calc.v, m.cols, m.cols),
        v_inv: from_bigint_grid(&calc.v_inv, m.cols, m.cols),
    }
}
