//! Finite-dimensional Lie triple systems, Bol algebras and Malcev algebras
//! given by exact structure constants.
//!
//! The crate provides axiom checking with failure witnesses, nilpotency and
//! solvability series, ideal closures and a simplicity test, the graded
//! Lie envelope of a triple system, a catalog of standard examples, and a
//! JSON structure-constant format shared with the command line tool.

pub mod axioms;
pub mod catalog;
pub mod envelope;
pub mod json;
pub mod series;
pub mod subspace;
pub mod system;

pub use axioms::{check_axioms, AxiomCheck, AxiomMode, AxiomReport, AxiomWitness};
pub use envelope::{lie_envelope, LieAlgebraTable, LieEnvelope, Parity};
pub use series::{ideal_closure, is_simple, lower_central_series, SeriesMode, SeriesReport};
pub use subspace::SubspaceBasis;
pub use system::TernarySystem;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LtsError {
    #[error("structure constant index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("vector has length {got}, expected {expected}")]
    VectorLength { got: usize, expected: usize },
    #[error("malcev mode requires a system with an empty ternary part")]
    MalcevNeedsBinaryOnly,
    #[error("input is not a Malcev algebra: axiom `{axiom}` fails")]
    NotMalcev { axiom: String },
    #[error("span of the bracket operators is not closed under commutators; input is not a Lie triple system")]
    EnvelopeNotClosed,
    #[error("unknown catalog name `{0}`")]
    UnknownCatalogName(String),
    #[error("bilinear form must be symmetric")]
    FormNotSymmetric,
    #[error("bilinear form must be non-degenerate")]
    FormDegenerate,
    #[error("invalid structure constants: {0}")]
    InvalidJson(String),
}
