//! The non-associative enveloping algebra of a Lie triple system.
//!
//! The construction works inside the associative enveloping algebra of the
//! graded Lie envelope. The linear map `q(x) = sum x_(1) x_(2)` is
//! invertible there; writing `r` for its inverse, the modified product
//!
//! ```text
//! x * y = sum r(x_(1)) y r(x_(2))
//! ```
//!
//! is unital and non-associative, and the unital subalgebra generated by
//! the odd part `V` is the enveloping algebra of the triple system, with a
//! basis of right-normed ordered monomials in a basis of `V`. The envelope
//! is built for the bracket rescaled by 4, which makes the induced product
//! recover the original bracket: `a(bc) - b(ac) = [a,b,c]`.
//!
//! A session owns the envelope, the rewriting algebra and all caches;
//! distinct sessions are fully independent. All results are deterministic
//! functions of the system and the inputs.

mod element;
mod session;

pub use element::{UVElement, UvTensor, UvTermMap};
pub use session::EnvelopeSession;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum StarError {
    #[error("system does not satisfy the Lie triple system axioms: `{axiom}` fails")]
    AxiomsFailed { axiom: String },
    #[error("the enveloping construction requires an identically zero binary bracket")]
    NonzeroBinaryBracket,
    #[error("element does not lie in the subalgebra generated by the system")]
    NotInSubalgebra,
    #[error(transparent)]
    Lts(#[from] lts_core::LtsError),
}
