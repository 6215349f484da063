//! Concrete module builders: standard-simplex chains, cyclic modules of
//! algebras, automorphism-twisted paracyclic modules, the promotion of
//! simplicial modules, and the reconstruction functor from duchain
//! complexes to duplicial modules.

use std::collections::BTreeMap;

use crate::dk::{insert_with_bump, sequences, Dk};
use crate::duchain::DuchainComplex;
use crate::error::{Error, Result};
use crate::index_cat::{compose, enumerate_delta, generator, GeneratorKind};
use crate::linalg::invert;
use crate::matrix::Matrix;
use crate::module::TruncatedDuplicialModule;
use crate::ops::Ops;
use crate::ring::{CoefficientRing, Scalar};

/// A finite-dimensional unital algebra by structure constants, with an
/// optional automorphism for twisted modules.
#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    pub ring: CoefficientRing,
    pub dim: usize,
    pub unit: Vec<Scalar>,
    /// mult[i][j] = coordinates of e_i * e_j in the basis
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub automorphism: Option<Matrix>,
}

impl AlgebraSpec {
    /// x * y by bilinear extension of the structure constants.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let ring = self.ring;
        let mut out = vec![ring.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if ring.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if ring.is_zero(yj) {
                    continue;
                }
                let c = ring.mul(xi, yj);
                for (a, m) in out.iter_mut().zip(&self.mult[i][j]) {
                    *a = ring.add(a, &ring.mul(&c, m));
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.ring.zero(); self.dim];
        v[i] = self.ring.one();
        v
    }

    /// Checks the unit, associativity on basis triples, and (if present)
    /// that the automorphism is an invertible algebra map fixing the unit.
    pub fn validate(&self) -> Result<()> {

        if self.unit.len() != self.dim || self.mult.len() != self.dim {
            return Err(Error::InvalidAlgebra("structure constant shapes".into()));
        }
        for row in &self.mult {
            if row.len() != self.dim || row.iter().any(|v| v.len() != self.dim) {
                return Err(Error::InvalidAlgebra("structure constant shapes".into()));
            }
        }
        for i in 0..self.dim {
            let e = self.basis(i);
            if self.product(&self.unit, &e) != e || self.product(&e, &self.unit) != e {
                return Err(Error::InvalidAlgebra(format!(
                    "unit is not a two-sided identity on basis element {i}"
                )));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let left = self.product(&self.product(&self.basis(i), &self.basis(j)), &self.basis(k));
                    let right = self.product(&self.basis(i), &self.product(&self.basis(j), &self.basis(k)));
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        if let Some(s) = &self.automorphism {
            s.check_shape(self.dim, self.dim, "automorphism")?;
            invert(s).map_err(|_| Error::NonInvertibleAutomorphism)?;
            if s.mul_vec(&self.unit) != self.unit {
                return Err(Error::InvalidAlgebra(
                    "automorphism does not fix the unit".into(),
                ));
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let lhs = s.mul_vec(&self.product(&self.basis(i), &self.basis(j)));
                    let rhs = self.product(&s.column(i), &s.column(j));
                    if lhs != rhs {
                        return Err(Error::InvalidAlgebra(format!(
                            "automorphism is not multiplicative on ({i},{j})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn apply_automorphism(&self, x: &[Scalar]) -> Vec<Scalar> {
        match &self.automorphism {
            Some(s) => s.mul_vec(x),
            None => x.to_vec(),
        }
    }

    fn automorphism_is_trivial(&self) -> bool {
        match &self.automorphism {
            None => true,
            Some(s) => s.is_identity(),
        }
    }

    /// The ground ring as a one-dimensional algebra.
    pub fn ground(ring: CoefficientRing) -> Self {
        AlgebraSpec {
            ring,
            dim: 1,
            unit: vec![ring.one()],
            mult: vec![vec![vec![ring.one()]]],
            automorphism: None,
        }
    }

    /// Dual numbers R[x]/(x^2), with basis (1, x).
    pub fn dual_numbers(ring: CoefficientRing) -> Self {
        let zero = || ring.zero();
        let one = || ring.one();
        AlgebraSpec {
            ring,
            dim: 2,
            unit: vec![one(), zero()],
            mult: vec![
                vec![vec![one(), zero()], vec![zero(), one()]],
                vec![vec![zero(), one()], vec![zero(), zero()]],
            ],
            automorphism: None,
        }
    }

    /// Dual numbers with the sign automorphism x -> -x.
    pub fn dual_numbers_twisted(ring: CoefficientRing) -> Self {
        let mut a = Self::dual_numbers(ring);
        let mut s = Matrix::identity(ring, 2);
        s.set(1, 1, ring.from_i64(-1));
        a.automorphism = Some(s);
        a
    }
}

// ---------------------------------------------------------------------------
// Tensor-power modules of an algebra
// ---------------------------------------------------------------------------

/// Basis tuples of A^{(n+1)} in lexicographic order, slot 0 leftmost (most
/// significant), so matrices are reproducible bit for bit.
fn tuple_index(dim: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &t| acc * dim + t)
}

fn tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * dim);
        for t in &out {
            for v in 0..dim {
                let mut t2 = t.clone();
                t2.push(v);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

fn tensor_module(a: &AlgebraSpec, n_max: usize) -> Result<TruncatedDuplicialModule> {
    a.validate()?;
    let ring = a.ring;
    let dim = a.dim;
    let ranks: Vec<usize> = (0..=n_max)
        .map(|n| dim.checked_pow(n as u32 + 1).expect("rank overflow"))
        .collect();

    // adds coeff * (tensor with slot `slot` replaced by the coordinates of
    // `value`) into the column
    let add_term = |col: &mut Vec<Scalar>, prefix: &[usize], value: &[Scalar], suffix: &[usize]| {
        for (v, c) in value.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            let mut tuple = Vec::with_capacity(prefix.len() + 1 + suffix.len());
            tuple.extend_from_slice(prefix);
            tuple.push(v);
            tuple.extend_from_slice(suffix);
            let idx = tuple_index(dim, &tuple);
            col[idx] = ring.add(&col[idx], c);
        }
    };

    let mut face: Vec<Vec<Matrix>> = vec![vec![]];
    for n in 1..=n_max {
        let mut faces = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut m = Matrix::zeros(ring, ranks[n - 1], ranks[n]);
            for (jcol, tuple) in tuples(dim, n + 1).iter().enumerate() {
                let mut col = vec![ring.zero(); ranks[n - 1]];
                if i < n {
                    // multiply slots i and i+1
                    let prod = a.product(&a.basis(tuple[i]), &a.basis(tuple[i + 1]));
                    let prefix = &tuple[..i];
                    let suffix = &tuple[i + 2..];
                    add_term(&mut col, prefix, &prod, suffix);
                } else {
                    // wrap: sigma(a_n) a_0 in slot 0
                    let twisted = a.apply_automorphism(&a.basis(tuple[n]));
                    let prod = a.product(&twisted, &a.basis(tuple[0]));
                    add_term(&mut col, &[], &prod, &tuple[1..n]);
                }
                m.set_column(jcol, &col);
            }
            faces.push(m);
        }
        face.push(faces);
    }

    // The shift acts by t_n(a_0 ... a_n) = a_1 ... a_n sigma^{-1}(a_0):
    // this is the rotation compatible with the eta/epsilon formulas (it is
    // forced by t_n = face_{n+1,0} s_{n,n+1} and the periodic-function
    // picture, where the slot wrapped past the period picks up the inverse
    // twist). Its inverse is b_0 ... b_n -> sigma(b_n) b_0 ... b_{n-1}.
    let mut t: Vec<Option<Matrix>> = Vec::with_capacity(n_max + 1);
    let mut t_inv: Vec<Option<Matrix>> = Vec::with_capacity(n_max + 1);
    let inv_auto = match &a.automorphism {
        Some(s) => Some(invert(s).map_err(|_| Error::NonInvertibleAutomorphism)?),
        None => None,
    };
    for n in 0..=n_max {
        let mut tm = Matrix::zeros(ring, ranks[n], ranks[n]);
        let mut tim = Matrix::zeros(ring, ranks[n], ranks[n]);
        for (jcol, tuple) in tuples(dim, n + 1).iter().enumerate() {
            let mut col = vec![ring.zero(); ranks[n]];
            let wrapped = match &inv_auto {
                Some(s) => s.mul_vec(&a.basis(tuple[0])),
                None => a.basis(tuple[0]),
            };
            for (v, c) in wrapped.iter().enumerate() {
                if ring.is_zero(c) {
                    continue;
                }
                let mut rot = tuple[1..].to_vec();
                rot.push(v);
                let idx = tuple_index(dim, &rot);
                col[idx] = ring.add(&col[idx], c);
            }
            tm.set_column(jcol, &col);

            let mut icol = vec![ring.zero(); ranks[n]];
            let twisted = a.apply_automorphism(&a.basis(tuple[n]));
            add_term(&mut icol, &[], &twisted, &tuple[..n]);
            tim.set_column(jcol, &icol);
        }
        t.push(Some(tm));
        t_inv.push(Some(tim));
    }

    let mut degen: Vec<Vec<Matrix>> = Vec::with_capacity(n_max + 1);
    for n in 0..n_max {
        let mut degens = Vec::with_capacity(n + 2);
        for i in 0..=n {
            let mut m = Matrix::zeros(ring, ranks[n + 1], ranks[n]);
            for (jcol, tuple) in tuples(dim, n + 1).iter().enumerate() {
                let mut col = vec![ring.zero(); ranks[n + 1]];
                // insert the unit after slot i
                add_term(&mut col, &tuple[..=i], &a.unit, &tuple[i + 1..]);
                m.set_column(jcol, &col);
            }
            degens.push(m);
        }
        // extra degeneracy s_{n,n+1} = t_{n+1} s_{n,0}
        let extra = t[n + 1].as_ref().unwrap().mul(&degens[0]);
        degens.push(extra);
        degen.push(degens);
    }
    degen.push(vec![]);

    TruncatedDuplicialModule::new(ring, n_max, ranks, face, degen, t, t_inv)
}

/// The cyclic module A^{(n+1)} of a unital algebra: faces multiply
/// adjacent tensor factors (wrapping at the top face), degeneracies insert
/// the unit, t rotates the factors.
pub fn algebra_cyclic_module(a: &AlgebraSpec, n_max: usize) -> Result<TruncatedDuplicialModule> {
    if !a.automorphism_is_trivial() {
        return Err(Error::InvalidAlgebra(
            "algebra_cyclic_module needs a trivial automorphism; use twisted_paracyclic_module"
                .into(),
        ));
    }
    tensor_module(a, n_max)
}

/// The sigma-twisted paracyclic module of (A, sigma): the last face and t
/// apply the automorphism to the factor they wrap around.
pub fn twisted_paracyclic_module(a: &AlgebraSpec, n_max: usize) -> Result<TruncatedDuplicialModule> {
    if a.automorphism.is_none() {
        return Err(Error::InvalidAlgebra(
            "twisted_paracyclic_module needs an automorphism".into(),
        ));
    }
    tensor_module(a, n_max)
}

// ---------------------------------------------------------------------------
// Standard simplices
// ---------------------------------------------------------------------------

/// Chains of the standard k-simplex: M_n is free on Delta([n],[k]) and the
/// structure maps act by precomposition with the generators. Simplicial
/// only: no extra degeneracies and no t.
pub fn simplex_chains(
    k: usize,
    n_max: usize,
    ring: CoefficientRing,
) -> Result<TruncatedDuplicialModule> {
    let bases: Vec<Vec<crate::index_cat::IndexMorphism>> =
        (0..=n_max).map(|n| enumerate_delta(n, k)).collect();
    let ranks: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let index_of = |n: usize, f: &crate::index_cat::IndexMorphism| -> usize {
        bases[n].iter().position(|g| g == f).expect("basis morphism")
    };

    let mut face: Vec<Vec<Matrix>> = vec![vec![]];
    for n in 1..=n_max {
        let mut faces = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let eps = generator(GeneratorKind::Face, n, i)?;
            let mut m = Matrix::zeros(ring, ranks[n - 1], ranks[n]);
            for (j, phi) in bases[n].iter().enumerate() {
                let target = compose(phi, &eps)?;
                m.set(index_of(n - 1, &target), j, ring.one());
            }
            faces.push(m);
        }
        face.push(faces);
    }

    let mut degen: Vec<Vec<Matrix>> = Vec::new();
    for n in 0..n_max {
        let mut degens = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let eta = generator(GeneratorKind::Degeneracy, n, i)?;
            let mut m = Matrix::zeros(ring, ranks[n + 1], ranks[n]);
            for (j, phi) in bases[n].iter().enumerate() {
                let target = compose(phi, &eta)?;
                m.set(index_of(n + 1, &target), j, ring.one());
            }
            degens.push(m);
        }
        degen.push(degens);
    }
    degen.push(vec![]);

    let t = vec![None; n_max + 1];
    let t_inv = vec![None; n_max + 1];
    TruncatedDuplicialModule::new(ring, n_max, ranks, face, degen, t, t_inv)
}

// ---------------------------------------------------------------------------
// The reconstruction functor: duchain complexes -> duplicial modules
// ---------------------------------------------------------------------------

/// A formal term: coefficient-free word with a component vector; the
/// coefficient is folded into the vector.
type Term = (Vec<usize>, usize, Vec<Scalar>);

struct Reconstructor<'a> {
    v: &'a DuchainComplex,
    ring: CoefficientRing,
}

impl<'a> Reconstructor<'a> {
    fn scale(&self, vec: &[Scalar], sign_pow: usize) -> Vec<Scalar> {
        if sign_pow % 2 == 0 {
            vec.to_vec()
        } else {
            vec.iter().map(|x| self.ring.neg(x)).collect()
        }
    }

    /// face_{n,i} applied to word(seq) * vec, by pushing the face through
    /// the word with the simplicial relations; inner faces vanish on the
    /// components and face 0 acts as the duchain b.
    fn apply_face(&self, n: usize, i: usize, seq: &[usize], vec: &[Scalar]) -> Vec<Term> {
        match seq.split_first() {
            None => {
                if i == 0 {
                    vec![(vec![], n - 1, self.v.b(n).mul_vec(vec))]
                } else {
                    vec![]
                }
            }
            Some((&head, tail)) => {
                if i == head || i == head + 1 {
                    vec![(tail.to_vec(), n - 1 - tail.len(), vec.to_vec())]
                } else if i < head {
                    self.apply_face(n - 1, i, tail, vec)
                        .into_iter()
                        .map(|(s, cd, v)| {
                            let mut s2 = Vec::with_capacity(s.len() + 1);
                            s2.push(head - 1);
                            s2.extend(s);
                            (s2, cd, v)
                        })
                        .collect()
                } else {
                    // i > head + 1
                    self.apply_face(n - 1, i - 1, tail, vec)
                        .into_iter()
                        .map(|(s, cd, v)| {
                            let mut s2 = Vec::with_capacity(s.len() + 1);
                            s2.push(head);
                            s2.extend(s);
                            (s2, cd, v)
                        })
                        .collect()
                }
            }
        }
    }

    /// Inner degeneracy s_{n,i}, 0 <= i <= n: straighten the enlarged word.
    fn apply_inner_degen(&self, i: usize, seq: &[usize], comp_degree: usize, vec: &[Scalar]) -> Term {
        (insert_with_bump(i, seq), comp_degree, vec.to_vec())
    }

    /// Extra degeneracy s_{n,n+1}: pushed inward with
    /// s_{n,n+1} s_{n-1,i} = s_{n,i} s_{n-1,n}; on a component it expands as
    /// s_{n,n+1} x = (-1)^{n+1} d_n x + sum_i (-1)^{n+i} s_{n,i} x.
    fn apply_extra_degen(&self, n: usize, seq: &[usize], vec: &[Scalar]) -> Vec<Term> {
        match seq.split_first() {
            None => {
                let mut out = Vec::with_capacity(n + 2);
                let d = self.v.d(n).mul_vec(vec);
                out.push((vec![], n + 1, self.scale(&d, n + 1)));
                for i in 0..=n {
                    out.push((vec![i], n, self.scale(vec, n + i)));
                }
                out
            }
            Some((&head, tail)) => self
                .apply_extra_degen(n - 1, tail, vec)
                .into_iter()
                .map(|(s, cd, v)| self.apply_inner_degen(head, &s, cd, &v))
                .collect(),
        }
    }
}

/// Layout of the reconstructed module: block offsets per degree.
struct Layout {
    seqs: Vec<Vec<Vec<usize>>>,
    offsets: Vec<BTreeMap<Vec<usize>, usize>>,
    ranks: Vec<usize>,
}

fn layout_for(v: &DuchainComplex) -> Layout {
    let n_max = v.n_max;
    let mut seqs = Vec::with_capacity(n_max + 1);
    let mut offsets = Vec::with_capacity(n_max + 1);
    let mut ranks = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let per_degree = sequences(n);
        let mut offset_map = BTreeMap::new();
        let mut acc = 0usize;
        for seq in &per_degree {
            offset_map.insert(seq.clone(), acc);
            acc += v.rank(n - seq.len());
        }
        seqs.push(per_degree);
        offsets.push(offset_map);
        ranks.push(acc);
    }
    Layout {
        seqs,
        offsets,
        ranks,
    }
}

/// Builds the duplicial module whose normalization is the given duchain
/// complex. M_n is the direct sum of copies of V_{n-k} indexed by strictly
/// decreasing degeneracy words; the structure maps are computed by term
/// rewriting and the cyclic operator is t_n = face_{n+1,0} s_{n,n+1}.
pub fn duchain_to_duplicial(v: &DuchainComplex) -> Result<TruncatedDuplicialModule> {
    let ring = v.ring;
    let n_max = v.n_max;
    let layout = layout_for(v);
    let rec = Reconstructor { v, ring };

    let assemble = |target_degree: usize, source_degree: usize, terms_of: &dyn Fn(&[usize], &[Scalar]) -> Vec<Term>| -> Matrix {
        let mut m = Matrix::zeros(ring, layout.ranks[target_degree], layout.ranks[source_degree]);
        for seq in &layout.seqs[source_degree] {
            let comp_degree = source_degree - seq.len();
            let col_base = layout.offsets[source_degree][seq];
            for j in 0..v.rank(comp_degree) {
                let mut unit = vec![ring.zero(); v.rank(comp_degree)];
                unit[j] = ring.one();
                for (out_seq, out_degree, out_vec) in terms_of(seq, &unit) {
                    debug_assert_eq!(out_degree, target_degree - out_seq.len());
                    let row_base = layout.offsets[target_degree][&out_seq];
                    for (r, val) in out_vec.iter().enumerate() {
                        if ring.is_zero(val) {
                            continue;
                        }
                        let cur = m.get(row_base + r, col_base + j);
                        let sum = ring.add(cur, val);
                        m.set(row_base + r, col_base + j, sum);
                    }
                }
            }
        }
        m
    };

    let mut face: Vec<Vec<Matrix>> = vec![vec![]];
    for n in 1..=n_max {
        let mut faces = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let f = |seq: &[usize], vec: &[Scalar]| rec.apply_face(n, i, seq, vec);
            faces.push(assemble(n - 1, n, &f));
        }
        face.push(faces);
    }

    let mut degen: Vec<Vec<Matrix>> = Vec::new();
    for n in 0..n_max {
        let mut degens = Vec::with_capacity(n + 2);
        for i in 0..=n {
            let f = |seq: &[usize], vec: &[Scalar]| {
                vec![rec.apply_inner_degen(i, seq, n - seq.len(), vec)]
            };
            degens.push(assemble(n + 1, n, &f));
        }
        let f = |seq: &[usize], vec: &[Scalar]| rec.apply_extra_degen(n, seq, vec);
        degens.push(assemble(n + 1, n, &f));
        degen.push(degens);
    }
    degen.push(vec![]);

    let mut t: Vec<Option<Matrix>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n < n_max {
            t.push(Some(face[n + 1][0].mul(&degen[n][n + 1])));
        } else {
            t.push(None);
        }
    }
    let t_inv = vec![None; n_max + 1];

    TruncatedDuplicialModule::new(ring, n_max, layout.ranks.clone(), face, degen, t, t_inv)
}

// ---------------------------------------------------------------------------
// Promotion of simplicial modules
// ---------------------------------------------------------------------------

/// The cyclic module a simplicial module naturally carries: reconstruct
/// from the degenerate duchain (N(M), b, 0) and transport the extra
/// structure back along the Dold-Kan coordinate isomorphism. The simplicial
/// part of the result is the input itself.
pub fn promote_simplicial(m: &TruncatedDuplicialModule) -> Result<TruncatedDuplicialModule> {
    let mut dk = Dk::new(Ops::new(m));
    let n_max = m.n_max;
    let ring = m.ring;

    // the induced chain complex on N(M)
    let mut n_ranks = Vec::with_capacity(n_max + 1);
    let mut n_bases = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let basis = dk.n_basis(n)?;
        n_ranks.push(basis.cols);
        n_bases.push(basis);
    }
    let mut b_list = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let image = dk.ops.b(n)?.mul(&n_bases[n]);
        let (b_n, d_part) = dk.split_coords(n - 1, &image)?;
        if !d_part.is_zero() {
            return Err(Error::RelationFailure {
                identity: "b preserves the normalized chains".into(),
                degree: n,
            });
        }
        b_list.push(b_n);
    }
    let v = DuchainComplex::from_chain(ring, n_max, n_ranks, b_list)?;
    let rec = duchain_to_duplicial(&v)?;

    // transport the extra degeneracy and t back to the original basis
    let mut phi = Vec::with_capacity(n_max + 1); // reconstruction -> M
    let mut psi = Vec::with_capacity(n_max + 1); // M -> reconstruction
    for n in 0..=n_max {
        let f = dk.transition(n)?;
        psi.push(invert(&f)?);
        phi.push(f);
    }

    let mut degen = m.degen.clone();
    for n in 0..n_max {
        let extra = phi[n + 1].mul(&rec.degen[n][n + 1]).mul(&psi[n]);
        match degen[n].len() {
            len if len == n + 1 => degen[n].push(extra),
            len if len == n + 2 => degen[n][n + 1] = extra,
            _ => unreachable!(),
        }
    }
    let mut t: Vec<Option<Matrix>> = vec![None; n_max + 1];
    let mut t_inv: Vec<Option<Matrix>> = vec![None; n_max + 1];
    for n in 0..n_max {
        let tn = phi[n].mul(&rec.t_at(n)?).mul(&psi[n]);
        t_inv[n] = invert(&tn).ok();
        t[n] = Some(tn);
    }

    TruncatedDuplicialModule::new(
        ring,
        n_max,
        m.ranks.clone(),
        m.face.clone(),
        degen,
        t,
        t_inv,
    )
}

// ---------------------------------------------------------------------------
// Builtins
// ---------------------------------------------------------------------------

pub mod builtins {
    use super::*;

    pub const NAMES: &[&str] = &[
        "ground-ring",
        "simplex-0",
        "simplex-1",
        "simplex-2",
        "dual-numbers",
        "dual-numbers-twisted",
        "scalar-twisted-u",
    ];

    pub fn ground_ring(ring: CoefficientRing, n_max: usize) -> Result<TruncatedDuplicialModule> {
        algebra_cyclic_module(&AlgebraSpec::ground(ring), n_max)
    }

    pub fn simplex(k: usize, ring: CoefficientRing, n_max: usize) -> Result<TruncatedDuplicialModule> {
        promote_simplicial(&simplex_chains(k, n_max, ring)?)
    }

    pub fn dual_numbers(ring: CoefficientRing, n_max: usize) -> Result<TruncatedDuplicialModule> {
        algebra_cyclic_module(&AlgebraSpec::dual_numbers(ring), n_max)
    }

    pub fn dual_numbers_twisted(
        ring: CoefficientRing,
        n_max: usize,
    ) -> Result<TruncatedDuplicialModule> {
        twisted_paracyclic_module(&AlgebraSpec::dual_numbers_twisted(ring), n_max)
    }

    /// The u-twisted parachain: V_n is the ground ring in every degree with
    /// b = 1 - u on odd degrees and d = 1 on even degrees, so the Karoubi
    /// operator on the normalization is multiplication by u. Its
    /// reconstruction is paracyclic exactly when u is a unit.
    pub fn scalar_twisted_duchain(
        ring: CoefficientRing,
        u: i64,
        n_max: usize,
    ) -> Result<DuchainComplex> {
        let ranks = vec![1usize; n_max + 1];
        let b_list: Vec<Matrix> = (1..=n_max)
            .map(|n| {
                let val = if n % 2 == 1 { ring.from_i64(1 - u) } else { ring.zero() };
                Matrix::from_fn(ring, 1, 1, |_, _| val.clone())
            })
            .collect();
        let d_list: Vec<Matrix> = (0..n_max)
            .map(|n| {
                let val = if n % 2 == 0 { ring.one() } else { ring.zero() };
                Matrix::from_fn(ring, 1, 1, |_, _| val.clone())
            })
            .collect();
        DuchainComplex::new(ring, n_max, ranks, b_list, d_list)
    }

    pub fn scalar_twisted(
        ring: CoefficientRing,
        u: i64,
        n_max: usize,
    ) -> Result<TruncatedDuplicialModule> {
        duchain_to_duplicial(&scalar_twisted_duchain(ring, u, n_max)?)
    }

    pub fn by_name(
        name: &str,
        ring: CoefficientRing,
        n_max: usize,
        twist: i64,
    ) -> Result<TruncatedDuplicialModule> {
        match name {
            "ground-ring" => ground_ring(ring, n_max),
            "simplex-0" => simplex(0, ring, n_max),
            "simplex-1" => simplex(1, ring, n_max),
            "simplex-2" => simplex(2, ring, n_max),
            "dual-numbers" => dual_numbers(ring, n_max),
            "dual-numbers-twisted" => dual_numbers_twisted(ring, n_max),
            "scalar-twisted-u" => scalar_twisted(ring, twist, n_max),
            other => Err(Error::Parse(format!("unknown builtin module {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_algebra_validates() {
        AlgebraSpec::ground(CoefficientRing::Rationals).validate().unwrap();
        AlgebraSpec::dual_numbers(CoefficientRing::Integers).validate().unwrap();
        AlgebraSpec::dual_numbers_twisted(CoefficientRing::Rationals)
            .validate()
            .unwrap();
    }

    #[test]
    fn scalar_automorphism_on_the_ground_ring_is_rejected() {
        // an algebra map must fix the unit, so "sigma = 2" is not one
        let mut a = AlgebraSpec::ground(CoefficientRing::Rationals);
        a.automorphism = Some(Matrix::from_rows_i64(CoefficientRing::Rationals, &[&[2]]));
        assert!(matches!(a.validate(), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn simplex_chain_ranks() {
        let m = simplex_chains(1, 4, CoefficientRing::Integers).unwrap();
        assert_eq!(m.ranks, vec![2, 3, 4, 5, 6]);
        let m0 = simplex_chains(0, 3, CoefficientRing::Integers).unwrap();
        assert_eq!(m0.ranks, vec![1, 1, 1, 1]);
        for n in 1..=3 {
            for i in 0..=n {
                assert!(m0.face[n][i].is_identity());
            }
        }
    }

    #[test]
    fn ground_ring_module_is_all_ones() {
        let m = builtins::ground_ring(CoefficientRing::Integers, 3).unwrap();
        assert_eq!(m.ranks, vec![1, 1, 1, 1]);
        for n in 1..=3 {
            for i in 0..=n {
                assert!(m.face[n][i].is_identity());
            }
        }
        for n in 0..3 {
            for i in 0..=n + 1 {
                assert!(m.degen[n][i].is_identity());
            }
        }
        assert!(m.t_at(0).unwrap().is_identity());
    }

    #[test]
    fn dual_numbers_ranks_are_tensor_powers() {
        let m = builtins::dual_numbers(CoefficientRing::Rationals, 3).unwrap();
        assert_eq!(m.ranks, vec![2, 4, 8, 16]);
    }
}
