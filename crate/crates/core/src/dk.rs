//! Normalized chains and the Dold-Kan decomposition.
//!
//! N_n(M) is the image of the Dold-Puppe idempotent p_n, computed as
//! ker(1 - p_n); D_n(M) is ker(p_n). Every element then expands uniquely as
//! degeneracy words applied to normalized components, indexed by strictly
//! decreasing sequences in {0, ..., n-1}. The decomposition is computed by
//! the recursion x = p_n x + sum_i s_{n-1,i-1} (face_{n,i} p_{n,i} x),
//! straightening degeneracy words with s_{n,j} s_{n-1,k} = s_{n,k+1} s_{n-1,j}.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::linalg::{invert, kernel_basis};
use crate::matrix::Matrix;
use crate::module::Element;
use crate::ops::Ops;
use crate::ring::CoefficientRing;

/// The unique expansion of an element into degeneracy words applied to
/// normalized components. Components are ambient coordinate vectors in
/// M_{n-k} that happen to lie in N_{n-k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DkDecomposition {
    pub degree: usize,
    pub components: BTreeMap<Vec<usize>, Element>,
}

/// All strictly decreasing sequences over {0, ..., n-1}, enumerated by
/// length ascending, then lexicographically on the tuple. This ordering
/// fixes the block layout of every matrix built over the decomposition.
pub fn sequences(n: usize) -> Vec<Vec<usize>> {
    // descending tuples (i_1 > ... > i_k) with i_1 <= start_max
    fn gen(start_max: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        // the first entry must leave room for k-1 smaller values
        for first in (k - 1)..=start_max {
            prefix.push(first);
            gen(first.wrapping_sub(1), k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![vec![]];
    for k in 1..=n {
        let mut level: Vec<Vec<usize>> = Vec::new();
        gen(n - 1, k, &mut Vec::new(), &mut level);
        level.sort();
        out.extend(level);
    }
    out
}

/// Inserts a degeneracy index in front of a canonical word, applying
/// s_{m,j} s_{m-1,k} = s_{m,k+1} s_{m-1,j} until the word is strictly
/// decreasing again.
pub fn insert_with_bump(a: usize, seq: &[usize]) -> Vec<usize> {
    match seq.split_first() {
        None => vec![a],
        Some((&head, tail)) => {
            if a > head {
                let mut out = Vec::with_capacity(seq.len() + 1);
                out.push(a);
                out.extend_from_slice(seq);
                out
            } else {
                let mut out = Vec::with_capacity(seq.len() + 1);
                out.push(head + 1);
                out.extend(insert_with_bump(a, tail));
                out
            }
        }
    }
}

pub struct Dk<'a> {
    pub ops: Ops<'a>,
    n_basis: HashMap<usize, Matrix>,
    d_basis: HashMap<usize, Matrix>,
    coords: HashMap<usize, Matrix>,
    dec: HashMap<usize, BTreeMap<Vec<usize>, Matrix>>,
    words: HashMap<(usize, Vec<usize>), Matrix>,
}

impl<'a> Dk<'a> {
    pub fn new(ops: Ops<'a>) -> Self {
        Dk {
            ops,
            n_basis: HashMap::new(),
            d_basis: HashMap::new(),
            coords: HashMap::new(),
            dec: HashMap::new(),
            words: HashMap::new(),
        }
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ops.module.ring
    }

    fn check_ring(&self) -> Result<()> {
        let ring = self.ring();
        if ring.is_field() || ring == CoefficientRing::Integers {
            Ok(())
        } else {
            Err(Error::UnsupportedRing(format!(
                "normalized bases need a field or Z, got {ring}"
            )))
        }
    }

    /// Basis of N_n(M) = ker(1 - p_n) = im(p_n), as matrix columns.
    pub fn n_basis(&mut self, n: usize) -> Result<Matrix> {
        if let Some(m) = self.n_basis.get(&n) {
            return Ok(m.clone());
        }
        self.check_ring()?;
        let p = self.ops.p(n)?;
        let one = self.ops.identity(n);
        let cols = kernel_basis(&one.sub(&p))?;
        let m = Matrix::from_columns(self.ring(), self.ops.module.ranks[n], &cols);
        self.n_basis.insert(n, m.clone());
        Ok(m)
    }

    /// Basis of D_n(M) = ker(p_n), as matrix columns.
    pub fn d_basis(&mut self, n: usize) -> Result<Matrix> {
        if let Some(m) = self.d_basis.get(&n) {
            return Ok(m.clone());
        }
        self.check_ring()?;
        let p = self.ops.p(n)?;
        let cols = kernel_basis(&p)?;
        let m = Matrix::from_columns(self.ring(), self.ops.module.ranks[n], &cols);
        self.d_basis.insert(n, m.clone());
        Ok(m)
    }

    /// Inverse of [N-basis | D-basis]; its top rows extract N-coordinates.
    fn coords_matrix(&mut self, n: usize) -> Result<Matrix> {
        if let Some(m) = self.coords.get(&n) {
            return Ok(m.clone());
        }
        let nb = self.n_basis(n)?;
        let db = self.d_basis(n)?;
        let p = nb.hstack(&db);
        if p.rows != p.cols {
            return Err(Error::ShapeMismatch(format!(
                "N and D bases at degree {n} do not fill the module: {} + {} != {}",
                nb.cols, db.cols, p.rows
            )));
        }
        let inv = invert(&p)?;
        self.coords.insert(n, inv.clone());
        Ok(inv)
    }

    /// Expresses column vectors in the N-basis, returning (n_part, d_part)
    /// coordinate blocks.
    pub fn split_coords(&mut self, n: usize, vectors: &Matrix) -> Result<(Matrix, Matrix)> {
        let inv = self.coords_matrix(n)?;
        let all = inv.mul(vectors);
        let dim_n = self.n_basis(n)?.cols;
        let ring = self.ring();
        let n_part = Matrix::from_fn(ring, dim_n, all.cols, |i, j| all.get(i, j).clone());
        let d_part = Matrix::from_fn(ring, all.rows - dim_n, all.cols, |i, j| {
            all.get(i + dim_n, j).clone()
        });
        Ok((n_part, d_part))
    }

    /// The degeneracy word s_{n-1,i_1} s_{n-2,i_2} ... s_{n-k,i_k} as a
    /// matrix M_{n-k} -> M_n; the empty word is the identity.
    pub fn word_matrix(&mut self, n: usize, seq: &[usize]) -> Result<Matrix> {
        let key = (n, seq.to_vec());
        if let Some(m) = self.words.get(&key) {
            return Ok(m.clone());
        }
        let m = if seq.is_empty() {
            self.ops.identity(n)
        } else {
            let head = self.ops.module.degen_at(n - 1, seq[0])?.clone();
            let tail = self.word_matrix(n - 1, &seq[1..])?;
            head.mul(&tail)
        };
        self.words.insert(key, m.clone());
        Ok(m)
    }

    /// Matrices of the decomposition: for each sequence, the linear map
    /// sending x in M_n to its component in M_{n-k}.
    pub fn decomposition_matrices(&mut self, n: usize) -> Result<BTreeMap<Vec<usize>, Matrix>> {
        if let Some(m) = self.dec.get(&n) {
            return Ok(m.clone());
        }
        let mut table: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
        if n == 0 {
            table.insert(vec![], self.ops.identity(0));
        } else {
            table.insert(vec![], self.ops.p(n)?);
            let prev = self.decomposition_matrices(n - 1)?;
            for i in 1..=n {
                // the degenerate remainder s_{n-1,i-1} face_{n,i} p_{n,i} x
                let z = self.ops.module.face[n][i].mul(&self.ops.p_partial(n, i)?);
                for (sub_seq, sub_matrix) in &prev {
                    let seq = insert_with_bump(i - 1, sub_seq);
                    let contribution = sub_matrix.mul(&z);
                    match table.get_mut(&seq) {
                        Some(existing) => *existing = existing.add(&contribution),
                        None => {
                            table.insert(seq, contribution);
                        }
                    }
                }
            }
        }
        // make every sequence present, including zero components
        for seq in sequences(n) {
            let k = seq.len();
            table.entry(seq).or_insert_with(|| {
                Matrix::zeros(
                    self.ops.module.ring,
                    self.ops.module.ranks[n - k],
                    self.ops.module.ranks[n],
                )
            });
        }
        self.dec.insert(n, table.clone());
        Ok(table)
    }

    pub fn decompose(&mut self, x: &Element) -> Result<DkDecomposition> {
        let n = x.degree;
        if n > self.ops.module.n_max {
            return Err(Error::DegreeOutOfRange {
                what: "dk_decompose",
                degree: n,
                n_max: self.ops.module.n_max,
            });
        }
        let matrices = self.decomposition_matrices(n)?;
        let mut components = BTreeMap::new();
        for (seq, m) in &matrices {
            components.insert(
                seq.clone(),
                Element {
                    degree: n - seq.len(),
                    coords: m.mul_vec(&x.coords),
                },
            );
        }
        Ok(DkDecomposition {
            degree: n,
            components,
        })
    }

    /// Checks that a component is killed by every inner face of its degree.
    fn check_normalized(&mut self, seq: &[usize], comp: &Element) -> Result<()> {
        let j = comp.degree;
        let ring = self.ring();
        for i in 1..=j {
            let image = self.ops.module.face[j][i].mul_vec(&comp.coords);
            if image.iter().any(|v| !ring.is_zero(v)) {
                return Err(Error::NonNormalizedComponent {
                    seq: seq.to_vec(),
                    face: i,
                });
            }
        }
        Ok(())
    }

    pub fn reconstruct(&mut self, n: usize, decomposition: &DkDecomposition) -> Result<Element> {
        let ring = self.ring();
        let mut acc = Element::zero(ring, n, self.ops.module.ranks[n]);
        for (seq, comp) in &decomposition.components {
            if comp.degree != n - seq.len() {
                return Err(Error::ShapeMismatch(format!(
                    "component at {seq:?} has degree {}, expected {}",
                    comp.degree,
                    n - seq.len()
                )));
            }
            self.check_normalized(seq, comp)?;
            let w = self.word_matrix(n, seq)?;
            let term = w.mul_vec(&comp.coords);
            for (a, b) in acc.coords.iter_mut().zip(term) {
                *a = ring.add(a, &b);
            }
        }
        Ok(acc)
    }

    /// The layout of the decomposition at degree n: (sequence, component
    /// degree, component dimension), in canonical order.
    pub fn layout(&mut self, n: usize) -> Result<Vec<(Vec<usize>, usize, usize)>> {
        let mut out = Vec::new();
        for seq in sequences(n) {
            let j = n - seq.len();
            let dim = self.n_basis(j)?.cols;
            out.push((seq, j, dim));
        }
        Ok(out)
    }

    /// The reconstruction isomorphism: block columns word(seq) * N-basis,
    /// one block per sequence in canonical order. Square and invertible by
    /// the Dold-Kan theorem.
    pub fn transition(&mut self, n: usize) -> Result<Matrix> {
        let ring = self.ring();
        let rank = self.ops.module.ranks[n];
        let mut blocks: Vec<Matrix> = Vec::new();
        for (seq, j, _dim) in self.layout(n)? {
            let w = self.word_matrix(n, &seq)?;
            let nb = self.n_basis(j)?;
            blocks.push(w.mul(&nb));
        }
        let mut acc = Matrix::zeros(ring, rank, 0);
        for b in blocks {
            acc = acc.hstack(&b);
        }
        if acc.cols != rank {
            return Err(Error::ShapeMismatch(format!(
                "decomposition blocks at degree {n} have total dimension {}, expected {rank}",
                acc.cols
            )));
        }
        Ok(acc)
    }

    /// Coordinates of M_n in the decomposition blocks: the inverse of
    /// `transition(n)`.
    pub fn transition_inverse(&mut self, n: usize) -> Result<Matrix> {
        invert(&self.transition(n)?)
    }

    /// The duchain complex induced on N(M): b restricts (it equals
    /// face_{n,0} there) and d projects through the Dold-Puppe idempotent.
    /// For simplicial input the extra differential is zero.
    pub fn induced_duchain(&mut self) -> Result<crate::duchain::DuchainComplex> {
        let n_max = self.ops.module.n_max;
        let ring = self.ring();
        let duplicial = self.ops.module.has_extra_degeneracies();

        let mut ranks = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            ranks.push(self.n_basis(n)?.cols);
        }
        let mut b_list = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let basis = self.n_basis(n)?;
            let image = self.ops.b(n)?.mul(&basis);
            let (b_n, degenerate_part) = self.split_coords(n - 1, &image)?;
            if !degenerate_part.is_zero() {
                return Err(Error::RelationFailure {
                    identity: "b preserves the normalized chains".into(),
                    degree: n,
                });
            }
            b_list.push(b_n);
        }
        let mut d_list = Vec::with_capacity(n_max);
        for n in 0..n_max {
            if duplicial {
                let basis = self.n_basis(n)?;
                let image = self.ops.d(n)?.mul(&basis);
                let (d_n, _) = self.split_coords(n + 1, &image)?;
                d_list.push(d_n);
            } else {
                d_list.push(Matrix::zeros(ring, ranks[n + 1], ranks[n]));
            }
        }
        // the constructor verifies b^2 = 0; report a failing d^2 precisely
        for n in 0..n_max.saturating_sub(1) {
            if !d_list[n + 1].mul(&d_list[n]).is_zero() {
                return Err(Error::InducedSquareNonzero { degree: n });
            }
        }
        crate::duchain::DuchainComplex::new(ring, n_max, ranks, b_list, d_list)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_enumeration() {
        assert_eq!(sequences(0), vec![Vec::<usize>::new()]);
        assert_eq!(
            sequences(2),
            vec![vec![], vec![0], vec![1], vec![1, 0]]
        );
        assert_eq!(sequences(4).len(), 16);
        // strictly decreasing, bounded by n-1
        for seq in sequences(5) {
            assert!(seq.windows(2).all(|w| w[0] > w[1]));
            assert!(seq.first().map_or(true, |&i| i < 5));
        }
    }

    #[test]
    fn bump_insertion() {
        assert_eq!(insert_with_bump(2, &[1, 0]), vec![2, 1, 0]);
        // s_{m,0} s_{m-1,1} = s_{m,2} s_{m-1,0}
        assert_eq!(insert_with_bump(0, &[1]), vec![2, 0]);
        assert_eq!(insert_with_bump(1, &[1, 0]), vec![2, 1, 0]);
        assert_eq!(insert_with_bump(0, &[2, 1, 0]), vec![3, 2, 1, 0]);
        for seq in [vec![], vec![3, 1], vec![2, 1, 0]] {
            for a in 0..4 {
                let out = insert_with_bump(a, &seq);
                assert_eq!(out.len(), seq.len() + 1);
                assert!(out.windows(2).all(|w| w[0] > w[1]), "{a} into {seq:?} gave {out:?}");
            }
        }
    }
}
