//! The index categories of simplicial, duplicial and paracyclic modules.
//!
//! Morphisms [m] -> [n] are weakly monotone functions f: Z -> Z with
//! f(j + m + 1) = f(j) + n + 1, stored extensionally as the window
//! (f(0), ..., f(m)). Composition is then function composition, which makes
//! associativity free and turns the generator relations into testable
//! statements instead of definitions.

use crate::error::{Error, Result};

/// A morphism of the paracyclic index category, stored extensionally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexMorphism {
    /// domain degree m (object [m])
    pub m: usize,
    /// codomain degree n (object [n])
    pub n: usize,
    /// (f(0), ..., f(m)); the rest of f is determined by periodicity
    pub values: Vec<i64>,
}

/// Where a morphism lives: the simplex category, the duplicial index
/// category only, or the full paracyclic one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismClass {
    Delta,
    LambdaPlusOnly,
    LambdaInfinityOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// face ε_i^n : [n-1] -> [n]
    Face,
    /// degeneracy η_i^n : [n+1] -> [n]; i = n+1 is the extra degeneracy
    Degeneracy,
    /// shift τ_n : [n] -> [n]
    Shift,
    /// inverse shift τ_n^{-1}
    ShiftInverse,
}

/// One generator occurrence. `degree` is the codomain degree n of ε_i^n,
/// η_i^n or τ_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorToken {
    pub kind: GeneratorKind,
    pub degree: usize,
    pub index: usize,
}

/// A composable word of generators, listed outermost first: the word
/// [g_1, g_2, ..., g_r] denotes g_1 ∘ g_2 ∘ ... ∘ g_r.
pub type GeneratorWord = Vec<GeneratorToken>;

impl IndexMorphism {
    pub fn new(m: usize, n: usize, values: Vec<i64>) -> Result<Self> {
        if values.len() != m + 1 {
            return Err(Error::InvalidMorphism(format!(
                "expected {} values for domain [{}], got {}",
                m + 1,
                m,
                values.len()
            )));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMorphism("values not weakly monotone".into()));
        }
        if values[m] > values[0] + n as i64 + 1 {
            return Err(Error::InvalidMorphism(format!(
                "periodicity violated: f({m}) = {} > f(0) + {} = {}",
                values[m],
                n + 1,
                values[0] + n as i64 + 1
            )));
        }
        Ok(IndexMorphism { m, n, values })
    }

    pub fn identity(m: usize) -> Self {
        IndexMorphism {
            m,
            n: m,
            values: (0..=m as i64).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.m == self.n && self.values.iter().enumerate().all(|(j, &v)| v == j as i64)
    }

    /// The periodic extension evaluated at any integer.
    pub fn eval(&self, j: i64) -> i64 {
        let period = self.m as i64 + 1;
        let q = j.div_euclid(period);
        let r = j.rem_euclid(period);
        self.values[r as usize] + q * (self.n as i64 + 1)
    }
}

/// Builds a generator morphism, checking the index range for its kind.
pub fn generator(kind: GeneratorKind, n: usize, i: usize) -> Result<IndexMorphism> {
    match kind {
        GeneratorKind::Face => {
            if n == 0 || i > n {
                return Err(Error::IndexOutOfRange {
                    what: "face",
                    degree: n,
                    index: i as isize,
                });
            }
            let values = (0..n as i64)
                .map(|j| if j < i as i64 { j } else { j + 1 })
                .collect();
            Ok(IndexMorphism { m: n - 1, n, values })
        }
        GeneratorKind::Degeneracy => {
            if i > n + 1 {
                return Err(Error::IndexOutOfRange {
                    what: "degeneracy",
                    degree: n,
                    index: i as isize,
                });
            }
            let values = (0..=(n as i64 + 1))
                .map(|j| if j <= i as i64 { j } else { j - 1 })
                .collect();
            Ok(IndexMorphism { m: n + 1, n, values })
        }
        GeneratorKind::Shift => Ok(IndexMorphism {
            m: n,
            n,
            values: (1..=(n as i64 + 1)).collect(),
        }),
        GeneratorKind::ShiftInverse => Ok(IndexMorphism {
            m: n,
            n,
            values: (-1..=(n as i64 - 1)).collect(),
        }),
    }
}

/// g ∘ f, using the periodic extension of g.
pub fn compose(g: &IndexMorphism, f: &IndexMorphism) -> Result<IndexMorphism> {
    if f.n != g.m {
        return Err(Error::DegreeMismatch {
            inner: f.n,
            outer: g.m,
        });
    }
    let values = f.values.iter().map(|&v| g.eval(v)).collect();
    Ok(IndexMorphism {
        m: f.m,
        n: g.n,
        values,
    })
}

pub fn classify(f: &IndexMorphism) -> MorphismClass {
    if f.values[0] < 0 {
        MorphismClass::LambdaInfinityOnly
    } else if f.values[f.m] > f.n as i64 {
        MorphismClass::LambdaPlusOnly
    } else {
        MorphismClass::Delta
    }
}

/// Canonical factorization f = ε_{i_1} ... ε_{i_p} ∘ η_{j_1} ... η_{j_q} ∘ τ^k:
/// the unique shift power τ_m^k that moves f into Δ, preceded by the
/// standard epi-mono factorization (i_1 > ... > i_p the values missed by the
/// Δ part, j_1 < ... < j_q its repeated argument positions).
pub fn factorize(f: &IndexMorphism) -> GeneratorWord {
    // unique window start: the smallest j with f(j) >= 0
    let mut j_min: i64 = 0;
    if f.eval(0) >= 0 {
        while f.eval(j_min - 1) >= 0 {
            j_min -= 1;
        }
    } else {
        while f.eval(j_min) < 0 {
            j_min += 1;
        }
    }
    let shift = -j_min; // f = g ∘ τ_m^shift with g in Δ
    let g: Vec<i64> = (0..=f.m as i64).map(|j| f.eval(j + j_min)).collect();
    debug_assert!(g[0] >= 0 && g[f.m] <= f.n as i64);

    let m = f.m;
    let n = f.n;
    let repeats: Vec<usize> = (0..m).filter(|&j| g[j] == g[j + 1]).collect();
    let hit: std::collections::HashSet<i64> = g.iter().copied().collect();
    let mut missing: Vec<usize> = (0..=n as i64)
        .filter(|v| !hit.contains(v))
        .map(|v| v as usize)
        .collect();
    missing.sort_unstable_by(|a, b| b.cmp(a));

    let q = repeats.len();
    let p = missing.len();
    debug_assert_eq!(m + p, n + q);

    let mut word = GeneratorWord::new();
    for (idx, &i) in missing.iter().enumerate() {
        word.push(GeneratorToken {
            kind: GeneratorKind::Face,
            degree: n - idx,
            index: i,
        });
    }
    for (idx, &j) in repeats.iter().enumerate() {
        word.push(GeneratorToken {
            kind: GeneratorKind::Degeneracy,
            degree: m - q + idx,
            index: j,
        });
    }
    let kind = if shift >= 0 {
        GeneratorKind::Shift
    } else {
        GeneratorKind::ShiftInverse
    };
    for _ in 0..shift.unsigned_abs() {
        word.push(GeneratorToken {
            kind,
            degree: m,
            index: 0,
        });
    }
    word
}

/// Evaluates a word as a morphism out of [domain]; the domain is needed
/// because the empty word is an identity of unspecified degree.
pub fn eval_word(word: &[GeneratorToken], domain: usize) -> Result<IndexMorphism> {
    let mut acc = IndexMorphism::identity(domain);
    for token in word.iter().rev() {
        let g = generator(token.kind, token.degree, token.index)?;
        acc = compose(&g, &acc)?;
    }
    Ok(acc)
}

/// The contravariant duality of the paracyclic category: factorize, reverse
/// the word, and swap ε_i^n with η_{n-i}^{n-1}, fixing the shifts.
pub fn involution(f: &IndexMorphism) -> Result<IndexMorphism> {
    let word = factorize(f);
    let mut dual = GeneratorWord::with_capacity(word.len());
    for token in word.iter().rev() {
        dual.push(match token.kind {
            GeneratorKind::Face => GeneratorToken {
                kind: GeneratorKind::Degeneracy,
                degree: token.degree - 1,
                index: token.degree - token.index,
            },
            GeneratorKind::Degeneracy => GeneratorToken {
                kind: GeneratorKind::Face,
                degree: token.degree + 1,
                index: token.degree + 1 - token.index,
            },
            // shifts are fixed by the duality
            GeneratorKind::Shift | GeneratorKind::ShiftInverse => *token,
        });
    }
    eval_word(&dual, f.n)
}

/// All of Δ([m],[n]) in lexicographic order of the value tuples.
pub fn enumerate_delta(m: usize, n: usize) -> Vec<IndexMorphism> {
    let mut out = Vec::new();
    let mut current = vec![0i64; m + 1];
    loop {
        out.push(IndexMorphism {
            m,
            n,
            values: current.clone(),
        });
        // next weakly monotone tuple bounded by n
        let mut pos = m + 1;
        for j in (0..=m).rev() {
            if current[j] < n as i64 {
                pos = j;
                break;
            }
        }
        if pos == m + 1 {
            return out;
        }
        current[pos] += 1;
        let v = current[pos];
        for item in current.iter_mut().skip(pos + 1) {
            *item = v;
        }
    }
}

/// Index of a Δ morphism within `enumerate_delta(m, n)`.
pub fn delta_index(f: &IndexMorphism) -> Option<usize> {
    if classify(f) != MorphismClass::Delta {
        return None;
    }
    enumerate_delta(f.m, f.n).iter().position(|g| g == f)
}
