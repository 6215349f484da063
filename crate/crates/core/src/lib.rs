//! Exact-arithmetic engine for truncated simplicial, duplicial and
//! paracyclic modules.
//!
//! A module is stored as a stack of operator matrices (faces, degeneracies,
//! and optionally the cyclic operator t) over Z, Q or Z/m. Everything
//! derived from them — the differentials b and d, the Karoubi and
//! Dwyer-Kan operators, the Dold-Puppe idempotents, the Connes and
//! Ginzburg-Schedler homotopies, the Dold-Kan decomposition and the
//! duchain reconstruction — is computed as exact matrices, and the
//! structural identities relating them are checked as exact matrix
//! equalities. Homology over Z goes through the Smith normal form.

pub mod constructions;
pub mod duchain;
pub mod dk;
pub mod error;
pub mod homology;
pub mod index_cat;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod module;
pub mod ops;
pub mod ring;
pub mod snf;
pub mod suite;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use ring::{CoefficientRing, Scalar};
