//! Bounded-degree evidence that enveloping algebras of simple triple
//! systems have almost no ideals: exact centralizer computations, the
//! leading-term formula for commutators with generators, and the closed
//! determinant identity for the rotation-algebra system.
//!
//! Everything here is explicitly bounded-degree evidence, not a proof.

pub mod centralizer;
pub mod leading;
pub mod report;
pub mod sampling;
pub mod so3det;
pub mod suite;

pub use centralizer::{truncated_centralizer, CentralizerReport};
pub use leading::{leading_commutator_prediction, prediction_element};
pub use report::{scalar_to_json, Check, Report};
pub use sampling::DetRng;
pub use so3det::{so3_condition_det, So3Determinant};
