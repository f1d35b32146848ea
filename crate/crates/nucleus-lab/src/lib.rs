//! Finite-dimensional unital algebras from multiplication tables: their
//! associative nuclei and center, the left generalized alternative nucleus
//! with its induced triple system, ternary derivations, semisimple and
//! nilpotent parts of elements, and the direct-sum decomposition checker
//! for commuting nilpotent subsystems.

pub mod algebra;
pub mod decompose;
pub mod jc;
pub mod nuclei;
pub mod tables;
pub mod tder;

pub use algebra::FinAlgebra;
pub use decompose::{theorem_decompose, DecomposeReport};
pub use jc::jc_element;
pub use nuclei::{ln_alt, n_alt, nuclei, Nuclei};
pub use tder::{check_tder, lnalt_membership_via_tder, TernaryDerivation};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NucleusError {
    #[error("basis vector {index} violates the unit law")]
    UnitLaw { index: usize },
    #[error("the induced ternary bracket leaves the subspace; the table is inconsistent")]
    InducedBracketNotClosed,
    #[error("element does not lie in the left generalized alternative nucleus")]
    NotInLnAlt,
    #[error("semisimple/nilpotent part postcondition failed: {0}")]
    JordanChevalleyPostcondition(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid multiplication table: {0}")]
    InvalidJson(String),
    #[error(transparent)]
    Lts(#[from] lts_core::LtsError),
}
