use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: codomain of inner morphism is [{inner}], domain of outer is [{outer}]")]
    DegreeMismatch { inner: usize, outer: usize },

    #[error("index {index} out of range for {what} at degree {degree}")]
    IndexOutOfRange {
        what: &'static str,
        degree: usize,
        index: isize,
    },

    #[error("degree {degree} out of range for {what} (truncation N_max = {n_max})")]
    DegreeOutOfRange {
        what: &'static str,
        degree: usize,
        n_max: usize,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix not invertible ({witness})")]
    NotInvertible { witness: String },

    #[error("kernel/rank computation over Z/{modulus} hit a non-invertible pivot ({pivot}); a prime modulus is required")]
    CompositeModulus { modulus: u64, pivot: u64 },

    #[error("t is not available at degree {degree} (top of truncation, no stored matrix)")]
    TNotAvailable { degree: usize },

    #[error("decomposition component at sequence {seq:?} is not normalized (inner face {face} does not kill it)")]
    NonNormalizedComponent { seq: Vec<usize>, face: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("automorphism is not invertible")]
    NonInvertibleAutomorphism,

    #[error("invalid duchain complex: {0}")]
    InvalidDuchain(String),

    #[error("induced differential does not square to zero at degree {degree}")]
    InducedSquareNonzero { degree: usize },

    #[error("differentials do not compose to zero at degree {degree}")]
    NotAComplex { degree: usize },

    #[error("unsupported ring for this operation: {0}")]
    UnsupportedRing(String),

    #[error("invalid morphism data: {0}")]
    InvalidMorphism(String),

    #[error("structural relation {identity:?} fails at degree {degree}")]
    RelationFailure { identity: String, degree: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
