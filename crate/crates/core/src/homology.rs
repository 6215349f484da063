//! Homology of the complexes a module carries: (M, b), (N(M), b) with the
//! homotopy as witness, Hochschild homology of small algebras, and finite
//! truncations of the (b, B) and (d, D) mixed complexes on the normalized
//! chains.

use num_bigint::BigInt;
use num_traits::One;

use crate::constructions::{algebra_cyclic_module, AlgebraSpec};
use crate::dk::Dk;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::matrix::Matrix;
use crate::module::TruncatedDuplicialModule;
use crate::ops::Ops;
use crate::ring::CoefficientRing;
use crate::snf::smith_normal_form;

/// One homology group: free rank plus the torsion divisor chain (empty
/// over a field).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

/// ker(outgoing) / im(incoming), assuming outgoing * incoming = 0.
fn subquotient(
    ring: CoefficientRing,
    degree: usize,
    outgoing: &Matrix,
    incoming: &Matrix,
) -> Result<HomologyGroup> {
    if !outgoing.mul(incoming).is_zero() {
        return Err(Error::NotAComplex { degree });
    }
    match ring {
        CoefficientRing::Integers => {
            let snf = smith_normal_form(outgoing);
            let r = snf.rank();
            let kernel_dim = outgoing.cols - r;
            // incoming image in the kernel coordinates: the bottom rows of
            // V^{-1} * incoming
            let coords = snf.v_inv.mul(incoming);
            let x = Matrix::from_fn(ring, kernel_dim, incoming.cols, |i, j| {
                coords.get(i + r, j).clone()
            });
            let snf_x = smith_normal_form(&x);
            let torsion: Vec<BigInt> = snf_x
                .invariant_factors()
                .into_iter()
                .filter(|d| !d.is_one())
                .collect();
            Ok(HomologyGroup {
                degree,
                free_rank: kernel_dim - snf_x.rank(),
                torsion,
            })
        }
        _ => {
            let free_rank = outgoing.cols - rank(outgoing)? - rank(incoming)?;
            Ok(HomologyGroup {
                degree,
                free_rank,
                torsion: vec![],
            })
        }
    }
}

/// A plain chain complex: ranks for degrees 0..=top and boundary maps
/// `maps[k]`: C_{k+1} -> C_k.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub ring: CoefficientRing,
    pub ranks: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl ChainComplex {
    pub fn new(ring: CoefficientRing, ranks: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if ranks.is_empty() || maps.len() + 1 != ranks.len() {
            return Err(Error::ShapeMismatch(
                "chain complex needs one boundary per adjacent pair of degrees".into(),
            ));
        }
        for (k, m) in maps.iter().enumerate() {
            m.check_shape(ranks[k], ranks[k + 1], &format!("boundary {}", k + 1))?;
        }
        let c = ChainComplex { ring, ranks, maps };
        for n in 1..c.top() {
            if !c.boundary(n).mul(&c.boundary(n + 1)).is_zero() {
                return Err(Error::NotAComplex { degree: n });
            }
        }
        Ok(c)
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    /// The boundary C_n -> C_{n-1}; degree 0 maps into the zero module.
    pub fn boundary(&self, n: usize) -> Matrix {
        if n == 0 {
            Matrix::zeros(self.ring, 0, self.ranks[0])
        } else {
            self.maps[n - 1].clone()
        }
    }

    /// H_n = ker b_n / im b_{n+1}; defined below the top degree, where the
    /// incoming boundary is real rather than a truncation artifact.
    pub fn homology(&self, n: usize) -> Result<HomologyGroup> {
        if n >= self.top() {
            return Err(Error::DegreeOutOfRange {
                what: "homology",
                degree: n,
                n_max: self.top(),
            });
        }
        subquotient(self.ring, n, &self.boundary(n), &self.boundary(n + 1))
    }

    pub fn homology_range(&self, up_to: usize) -> Result<Vec<HomologyGroup>> {
        (0..=up_to).map(|n| self.homology(n)).collect()
    }

    pub fn from_module(module: &TruncatedDuplicialModule) -> Result<Self> {
        let mut ops = Ops::new(module);
        let maps: Result<Vec<Matrix>> = (1..=module.n_max).map(|n| ops.b(n)).collect();
        ChainComplex::new(module.ring, module.ranks.clone(), maps?)
    }
}

/// The independent rank oracle over a field:
/// dim H_n = rank_n - rank b_n - rank b_{n+1}.
pub fn field_rank_oracle(c: &ChainComplex, n: usize) -> Result<usize> {
    Ok(c.ranks[n] - rank(&c.boundary(n))? - rank(&c.boundary(n + 1))?)
}

/// Comparison of H(M, b) with H(N(M), b), with the Eilenberg-MacLane
/// homotopy identity as the witness that they agree.
#[derive(Debug, Clone)]
pub struct NormalizedComparison {
    pub degrees: Vec<(HomologyGroup, HomologyGroup)>,
    pub all_equal: bool,
    pub homotopy_identity_holds: bool,
}

pub fn normalized_vs_full_homology(
    module: &TruncatedDuplicialModule,
) -> Result<NormalizedComparison> {
    let full = ChainComplex::from_module(module)?;
    let mut dk = Dk::new(Ops::new(module));
    let induced = dk.induced_duchain()?;
    let normalized = ChainComplex::new(
        module.ring,
        induced.ranks.clone(),
        (1..=induced.n_max).map(|n| induced.b(n)).collect(),
    )?;

    let mut degrees = Vec::new();
    let mut all_equal = true;
    for n in 0..module.n_max {
        let a = full.homology(n)?;
        let b = normalized.homology(n)?;
        all_equal &= a == b;
        degrees.push((a, b));
    }

    // witness: b phi + phi b = p - 1 wherever it can be formed
    let mut ops = Ops::new(module);
    let mut homotopy_identity_holds = true;
    for n in 0..module.n_max {
        let mut lhs = ops.b(n + 1)?.mul(&ops.phi(n)?);
        if n >= 1 {
            lhs = lhs.add(&ops.phi(n - 1)?.mul(&ops.b(n)?));
        }
        let rhs = ops.p(n)?.sub(&ops.identity(n));
        homotopy_identity_holds &= lhs == rhs;
    }

    Ok(NormalizedComparison {
        degrees,
        all_equal,
        homotopy_identity_holds,
    })
}

/// Hochschild homology of an algebra: the homology of (C(A), b) where
/// C_n(A) = A^{(n+1)}.
pub fn hochschild_homology(a: &AlgebraSpec, up_to: usize) -> Result<Vec<HomologyGroup>> {
    let module = algebra_cyclic_module(a, up_to + 1)?;
    let complex = ChainComplex::from_module(&module)?;
    complex.homology_range(up_to)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedFlavor {
    /// (N[u], b + uB), u of degree -2
    BB,
    /// (N[v], d + vD), v of degree +2
    DD,
}

#[derive(Debug, Clone)]
pub struct MixedEntry {
    pub group: HomologyGroup,
    /// true when every weight column the untruncated complex would use at
    /// this degree is present (degree <= 2W + 1)
    pub truncation_independent: bool,
}

#[derive(Debug, Clone)]
pub struct MixedReport {
    pub flavor: MixedFlavor,
    pub weight_cutoff: usize,
    /// reported window: degrees 0 ..= n_max - 2W (and below the truncation)
    pub entries: Vec<MixedEntry>,
}

/// Homology of the truncated mixed complex on the normalized chains.
///
/// The total differential is assembled from the induced operators on N(M)
/// (where b p = p b makes the homotopy identity project cleanly) and is
/// verified to square to zero before any homology is computed; if it does
/// not — the obstruction is 1 - pi, which vanishes on N exactly for cyclic
/// modules — the assembly failure is reported as an error.
pub fn mixed_complex_homology(
    module: &TruncatedDuplicialModule,
    flavor: MixedFlavor,
    weight_cutoff: usize,
) -> Result<MixedReport> {
    let n_max = module.n_max;
    let ring = module.ring;
    let w_max = weight_cutoff;
    if n_max < 2 * w_max + 1 {
        return Err(Error::DegreeOutOfRange {
            what: "mixed complex window",
            degree: 2 * w_max + 1,
            n_max,
        });
    }
    let mut dk = Dk::new(Ops::new(module));

    // induced operators on N
    let mut n_dims = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        n_dims.push(dk.n_basis(n)?.cols);
    }
    let restrict = |dk: &mut Dk, x: &Matrix, from: usize, to: usize| -> Result<Matrix> {
        let basis = dk.n_basis(from)?;
        let image = x.mul(&basis);
        let (n_part, _) = dk.split_coords(to, &image)?;
        Ok(n_part)
    };

    // vertical maps per degree (b^N downward, d^N upward)
    let mut vertical = Vec::with_capacity(n_max + 1);
    let mut connecting = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        match flavor {
            MixedFlavor::BB => {
                let b = if n == 0 {
                    Matrix::zeros(ring, 0, n_dims[0])
                } else {
                    let bn = dk.ops.b(n)?;
                    restrict(&mut dk, &bn, n, n - 1)?
                };
                vertical.push(b);
                if n < n_max {
                    let big_b = dk.ops.connes_b(n)?;
                    connecting.push(Some(restrict(&mut dk, &big_b, n, n + 1)?));
                } else {
                    connecting.push(None);
                }
            }
            MixedFlavor::DD => {
                if n < n_max {
                    let dn = dk.ops.d(n)?;
                    vertical.push(restrict(&mut dk, &dn, n, n + 1)?);
                } else {
                    vertical.push(Matrix::zeros(ring, 0, n_dims[n]));
                }
                if n < n_max {
                    let big_d = dk.ops.gs_d(n)?;
                    let target = if n == 0 {
                        Matrix::zeros(ring, 0, n_dims[0])
                    } else {
                        restrict(&mut dk, &big_d, n, n - 1)?
                    };
                    connecting.push(Some(target));
                } else {
                    connecting.push(None);
                }
            }
        }
    }

    // columns of the total complex at degree nu: N_{nu - 2w}, w = 0..=W
    let columns = |nu: usize| -> Vec<(usize, usize)> {
        (0..=w_max)
            .filter_map(|w| {
                let j = nu.checked_sub(2 * w)?;
                Some((w, j))
            })
            .collect()
    };
    let total_dim = |nu: usize| -> usize { columns(nu).iter().map(|&(_, j)| n_dims[j]).sum() };

    // the total map out of degree nu: downward for bB (to nu-1), upward for
    // dD (to nu+1)
    let total_map = |nu: usize, vertical: &[Matrix], connecting: &[Option<Matrix>]| -> Result<Matrix> {
        let (target, source) = match flavor {
            MixedFlavor::BB => (nu - 1, nu),
            MixedFlavor::DD => (nu + 1, nu),
        };
        let src_cols = columns(source);
        let tgt_cols = columns(target);
        let offset = |cols: &[(usize, usize)], w: usize| -> Option<usize> {
            let mut acc = 0;
            for &(cw, j) in cols {
                if cw == w {
                    return Some(acc);
                }
                acc += n_dims[j];
            }
            None
        };
        let mut m = Matrix::zeros(ring, total_dim(target), total_dim(source));
        let mut place = |block: &Matrix, row0: usize, col0: usize| {
            for i in 0..block.rows {
                for j in 0..block.cols {
                    m.set(row0 + i, col0 + j, block.get(i, j).clone());
                }
            }
        };
        for &(w, j) in &src_cols {
            let col0 = offset(&src_cols, w).unwrap();
            match flavor {
                MixedFlavor::BB => {
                    // b keeps the weight, B drops it by one
                    if let Some(row0) = offset(&tgt_cols, w) {
                        place(&vertical[j], row0, col0);
                    }
                    if w >= 1 {
                        if let Some(row0) = offset(&tgt_cols, w - 1) {
                            let big_b = connecting[j].as_ref().ok_or(Error::DegreeOutOfRange {
                                what: "B",
                                degree: j,
                                n_max,
                            })?;
                            place(big_b, row0, col0);
                        }
                    }
                }
                MixedFlavor::DD => {
                    if let Some(row0) = offset(&tgt_cols, w) {
                        place(&vertical[j], row0, col0);
                    }
                    if w + 1 <= w_max {
                        if let Some(row0) = offset(&tgt_cols, w + 1) {
                            let big_d = connecting[j].as_ref().ok_or(Error::DegreeOutOfRange {
                                what: "D",
                                degree: j,
                                n_max,
                            })?;
                            place(big_d, row0, col0);
                        }
                    }
                }
            }
        }
        Ok(m)
    };

    let window_top = (n_max - 2 * w_max).min(n_max - 1);

    // assemble, verify squares, then take homology
    let mut maps: Vec<Matrix> = Vec::new(); // maps[nu] = total map used as "incoming at nu"
    match flavor {
        MixedFlavor::BB => {
            for nu in 1..=window_top + 1 {
                maps.push(total_map(nu, &vertical, &connecting)?);
            }
            for nu in 1..=window_top {
                if !maps[nu - 1].mul(&maps[nu]).is_zero() {
                    return Err(Error::NotAComplex { degree: nu });
                }
            }
        }
        MixedFlavor::DD => {
            for nu in 0..=window_top {
                maps.push(total_map(nu, &vertical, &connecting)?);
            }
            for nu in 0..window_top {
                if !maps[nu + 1].mul(&maps[nu]).is_zero() {
                    return Err(Error::NotAComplex { degree: nu });
                }
            }
        }
    }

    let mut entries = Vec::new();
    for nu in 0..=window_top {
        let group = match flavor {
            MixedFlavor::BB => {
                let outgoing = if nu == 0 {
                    Matrix::zeros(ring, 0, total_dim(0))
                } else {
                    maps[nu - 1].clone()
                };
                subquotient(ring, nu, &outgoing, &maps[nu])?
            }
            MixedFlavor::DD => {
                let incoming = if nu == 0 {
                    Matrix::zeros(ring, total_dim(0), 0)
                } else {
                    maps[nu - 1].clone()
                };
                subquotient(ring, nu, &maps[nu], &incoming)?
            }
        };
        entries.push(MixedEntry {
            group,
            truncation_independent: nu <= 2 * w_max + 1,
        });
    }

    Ok(MixedReport {
        flavor,
        weight_cutoff: w_max,
        entries,
    })
}
