//! JSON wire formats.
//!
//! Matrices are arrays of rows, each entry a decimal string ("p/q" for
//! non-integral rationals). Operator tables are per-degree lists: "face"
//! holds degrees 1..=n_max, "degen" degrees 0..n_max-1, "t" covers all of
//! 0..=n_max with nulls for absent entries.

use serde::{Deserialize, Serialize};

use crate::constructions::AlgebraSpec;
use crate::dk::DkDecomposition;
use crate::duchain::DuchainComplex;
use crate::error::{Error, Result};
use crate::homology::{HomologyGroup, MixedReport};
use crate::index_cat::{GeneratorKind, GeneratorToken, IndexMorphism};
use crate::matrix::Matrix;
use crate::module::{Element, TruncatedDuplicialModule};
use crate::ring::CoefficientRing;
use crate::suite::{Classification, EntryClass, IdentityReport, ModuleClass, Status};

pub type MatrixJson = Vec<Vec<String>>;

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.ring.format(m.get(i, j))).collect())
        .collect()
}

pub fn matrix_from_json(ring: CoefficientRing, rows: &MatrixJson, cols_hint: usize) -> Result<Matrix> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(cols_hint, |r| r.len());
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse("ragged matrix rows".into()));
    }
    let mut m = Matrix::zeros(ring, nrows, ncols);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m.set(i, j, ring.parse_scalar(s)?);
        }
    }
    Ok(m)
}

// ---------------------------------------------------------------------------
// Modules
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ModuleJson {
    pub ring: String,
    pub n_max: usize,
    pub ranks: Vec<usize>,
    pub face: Vec<Vec<MatrixJson>>,
    pub degen: Vec<Vec<MatrixJson>>,
    pub t: Vec<Option<MatrixJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_inv: Option<Vec<Option<MatrixJson>>>,
}

pub fn module_to_json(m: &TruncatedDuplicialModule) -> ModuleJson {
    ModuleJson {
        ring: m.ring.to_string(),
        n_max: m.n_max,
        ranks: m.ranks.clone(),
        face: (1..=m.n_max)
            .map(|n| m.face[n].iter().map(matrix_to_json).collect())
            .collect(),
        degen: (0..m.n_max)
            .map(|n| m.degen[n].iter().map(matrix_to_json).collect())
            .collect(),
        t: m.t.iter().map(|t| t.as_ref().map(matrix_to_json)).collect(),
        t_inv: if m.t_inv.iter().any(|t| t.is_some()) {
            Some(m.t_inv.iter().map(|t| t.as_ref().map(matrix_to_json)).collect())
        } else {
            None
        },
    }
}

pub fn module_from_json(json: &ModuleJson) -> Result<TruncatedDuplicialModule> {
    let ring = CoefficientRing::parse(&json.ring)?;
    let n_max = json.n_max;
    if json.ranks.len() != n_max + 1 {
        return Err(Error::Parse(format!(
            "expected {} ranks, found {}",
            n_max + 1,
            json.ranks.len()
        )));
    }
    if json.face.len() != n_max || json.degen.len() != n_max {
        return Err(Error::Parse(
            "face table must cover degrees 1..=n_max and degen 0..n_max-1".into(),
        ));
    }
    let mut face = vec![vec![]];
    for (k, mats) in json.face.iter().enumerate() {
        face.push(
            mats.iter()
                .map(|m| matrix_from_json(ring, m, json.ranks[k + 1]))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let mut degen: Vec<Vec<Matrix>> = Vec::new();
    for (n, mats) in json.degen.iter().enumerate() {
        degen.push(
            mats.iter()
                .map(|m| matrix_from_json(ring, m, json.ranks[n]))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    degen.push(vec![]);
    let parse_opt_table = |table: &Vec<Option<MatrixJson>>| -> Result<Vec<Option<Matrix>>> {
        if table.len() != n_max + 1 {
            return Err(Error::Parse("t table must cover 0..=n_max".into()));
        }
        table
            .iter()
            .enumerate()
            .map(|(n, t)| {
                t.as_ref()
                    .map(|m| matrix_from_json(ring, m, json.ranks[n]))
                    .transpose()
            })
            .collect()
    };
    let t = parse_opt_table(&json.t)?;
    let t_inv = match &json.t_inv {
        Some(table) => parse_opt_table(table)?,
        None => vec![None; n_max + 1],
    };
    TruncatedDuplicialModule::new(ring, n_max, json.ranks.clone(), face, degen, t, t_inv)
}

// ---------------------------------------------------------------------------
// Duchain complexes and algebras
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct DuchainJson {
    pub ring: String,
    pub n_max: usize,
    pub ranks: Vec<usize>,
    /// b[k] = b_{k+1}: V_{k+1} -> V_k
    pub b: Vec<MatrixJson>,
    /// d[k] = d_k: V_k -> V_{k+1}
    pub d: Vec<MatrixJson>,
}

pub fn duchain_to_json(v: &DuchainComplex) -> DuchainJson {
    DuchainJson {
        ring: v.ring.to_string(),
        n_max: v.n_max,
        ranks: v.ranks.clone(),
        b: v.b_matrices().iter().map(matrix_to_json).collect(),
        d: v.d_matrices().iter().map(matrix_to_json).collect(),
    }
}

pub fn duchain_from_json(json: &DuchainJson) -> Result<DuchainComplex> {
    let ring = CoefficientRing::parse(&json.ring)?;
    let b = json
        .b
        .iter()
        .enumerate()
        .map(|(k, m)| matrix_from_json(ring, m, *json.ranks.get(k + 1).unwrap_or(&0)))
        .collect::<Result<Vec<_>>>()?;
    let d = json
        .d
        .iter()
        .enumerate()
        .map(|(k, m)| matrix_from_json(ring, m, *json.ranks.get(k).unwrap_or(&0)))
        .collect::<Result<Vec<_>>>()?;
    DuchainComplex::new(ring, json.n_max, json.ranks.clone(), b, d)
}

#[derive(Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub unit: Vec<String>,
    /// mult[i][j] = coordinates of e_i * e_j
    pub mult: Vec<Vec<Vec<String>>>,
    pub automorphism: Option<MatrixJson>,
}

pub fn algebra_from_json(ring: CoefficientRing, json: &AlgebraJson) -> Result<AlgebraSpec> {
    let unit = json
        .unit
        .iter()
        .map(|s| ring.parse_scalar(s))
        .collect::<Result<Vec<_>>>()?;
    let mult = json
        .mult
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().map(|s| ring.parse_scalar(s)).collect())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let automorphism = json
        .automorphism
        .as_ref()
        .map(|m| matrix_from_json(ring, m, json.dim))
        .transpose()?;
    let spec = AlgebraSpec {
        ring,
        dim: json.dim,
        unit,
        mult,
        automorphism,
    };
    spec.validate()?;
    Ok(spec)
}

// ---------------------------------------------------------------------------
// Index category
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct MorphismJson {
    pub m: usize,
    pub n: usize,
    pub values: Vec<i64>,
}

pub fn morphism_to_json(f: &IndexMorphism) -> MorphismJson {
    MorphismJson {
        m: f.m,
        n: f.n,
        values: f.values.clone(),
    }
}

pub fn morphism_from_json(json: &MorphismJson) -> Result<IndexMorphism> {
    IndexMorphism::new(json.m, json.n, json.values.clone())
}

#[derive(Serialize, Deserialize)]
pub struct TokenJson {
    pub kind: String,
    pub n: usize,
    pub i: usize,
}

pub fn word_to_json(word: &[GeneratorToken]) -> Vec<TokenJson> {
    word.iter()
        .map(|t| TokenJson {
            kind: match t.kind {
                GeneratorKind::Face => "e",
                GeneratorKind::Degeneracy => "h",
                GeneratorKind::Shift => "t",
                GeneratorKind::ShiftInverse => "t_inv",
            }
            .to_string(),
            n: t.degree,
            i: t.index,
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ReportEntryJson {
    pub identity: String,
    pub degree: usize,
    pub status: String,
    pub witness: Option<MatrixJson>,
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn report_to_json(report: &IdentityReport) -> Vec<ReportEntryJson> {
    report
        .entries
        .iter()
        .map(|e| ReportEntryJson {
            identity: e.identity.clone(),
            degree: e.degree,
            status: match e.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
            }
            .into(),
            witness: e.witness.as_ref().map(matrix_to_json),
            class: match e.class {
                EntryClass::Theorem => "theorem",
                EntryClass::Variant => "variant",
            }
            .into(),
            note: e.note.clone(),
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
pub struct HomologyGroupJson {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

pub fn homology_to_json(groups: &[HomologyGroup]) -> Vec<HomologyGroupJson> {
    groups
        .iter()
        .map(|g| HomologyGroupJson {
            degree: g.degree,
            free_rank: g.free_rank,
            torsion: g.torsion.iter().map(|d| d.to_string()).collect(),
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
pub struct MixedReportJson {
    pub flavor: String,
    pub weight_cutoff: usize,
    pub entries: Vec<MixedEntryJson>,
}

#[derive(Serialize, Deserialize)]
pub struct MixedEntryJson {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub truncation_independent: bool,
}

pub fn mixed_report_to_json(report: &MixedReport) -> MixedReportJson {
    MixedReportJson {
        flavor: match report.flavor {
            crate::homology::MixedFlavor::BB => "bB".into(),
            crate::homology::MixedFlavor::DD => "dD".into(),
        },
        weight_cutoff: report.weight_cutoff,
        entries: report
            .entries
            .iter()
            .map(|e| MixedEntryJson {
                degree: e.group.degree,
                free_rank: e.group.free_rank,
                torsion: e.group.torsion.iter().map(|d| d.to_string()).collect(),
                truncation_independent: e.truncation_independent,
            })
            .collect(),
    }
}

#[derive(Serialize, Deserialize)]
pub struct ClassificationJson {
    pub class: String,
    pub witnesses: Vec<DegreeWitnessJson>,
}

#[derive(Serialize, Deserialize)]
pub struct DegreeWitnessJson {
    pub degree: usize,
    pub t_invertible: Option<bool>,
    pub big_t_is_identity: Option<bool>,
    pub kappa_invertible_on_n: Option<bool>,
    pub pi_invertible_on_n: Option<bool>,
    pub pi_identity_on_n: Option<bool>,
}

pub fn classification_to_json(c: &Classification) -> ClassificationJson {
    ClassificationJson {
        class: match c.class {
            ModuleClass::Duplicial => "duplicial",
            ModuleClass::Paracyclic => "paracyclic",
            ModuleClass::Cyclic => "cyclic",
        }
        .into(),
        witnesses: c
            .witnesses
            .iter()
            .map(|w| DegreeWitnessJson {
                degree: w.degree,
                t_invertible: w.t_invertible,
                big_t_is_identity: w.big_t_is_identity,
                kappa_invertible_on_n: w.kappa_invertible_on_n,
                pi_invertible_on_n: w.pi_invertible_on_n,
                pi_identity_on_n: w.pi_identity_on_n,
            })
            .collect(),
    }
}

#[derive(Serialize, Deserialize)]
pub struct DecompositionJson {
    pub degree: usize,
    pub components: Vec<ComponentJson>,
}

#[derive(Serialize, Deserialize)]
pub struct ComponentJson {
    pub sequence: Vec<usize>,
    pub degree: usize,
    pub coords: Vec<String>,
}

pub fn decomposition_to_json(ring: CoefficientRing, d: &DkDecomposition) -> DecompositionJson {
    DecompositionJson {
        degree: d.degree,
        components: d
            .components
            .iter()
            .map(|(seq, el)| ComponentJson {
                sequence: seq.clone(),
                degree: el.degree,
                coords: el.coords.iter().map(|c| ring.format(c)).collect(),
            })
            .collect(),
    }
}

pub fn element_from_strings(
    ring: CoefficientRing,
    degree: usize,
    coords: &[String],
) -> Result<Element> {
    Ok(Element {
        degree,
        coords: coords
            .iter()
            .map(|s| ring.parse_scalar(s))
            .collect::<Result<Vec<_>>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::builtins;

    #[test]
    fn module_json_round_trip() {
        let m = builtins::ground_ring(CoefficientRing::Mod(7), 3).unwrap();
        let json = module_to_json(&m);
        let text = serde_json::to_string(&json).unwrap();
        let back: ModuleJson = serde_json::from_str(&text).unwrap();
        let m2 = module_from_json(&back).unwrap();
        assert_eq!(m2.ranks, m.ranks);
        assert_eq!(m2.face, m.face);
        assert_eq!(m2.degen, m.degen);
    }

    #[test]
    fn rational_matrix_round_trip() {
        let q = CoefficientRing::Rationals;
        let m = Matrix::from_fn(q, 2, 2, |i, j| {
            q.parse_scalar(&format!("{}/{}", i as i64 + 1, j as i64 + 2)).unwrap()
        });
        let back = matrix_from_json(q, &matrix_to_json(&m), 2).unwrap();
        assert_eq!(m, back);
    }
}
