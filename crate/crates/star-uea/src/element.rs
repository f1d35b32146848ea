//! Elements of the non-associative enveloping algebra in right-normed
//! monomial coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use exact_linalg::Scalar;
use lie_uea::terms;
use num_traits::Zero;

use crate::session::EnvelopeSession;
use crate::StarError;

pub type UvTermMap = BTreeMap<Vec<usize>, Scalar>;

/// Sparse element: weakly increasing multi-indices over the `V` basis,
/// with rational coefficients. The empty multi-index is the unit.
#[derive(Clone)]
pub struct UVElement {
    session: Arc<EnvelopeSession>,
    terms: UvTermMap,
}

impl UVElement {
    pub fn from_terms(session: &Arc<EnvelopeSession>, terms: UvTermMap) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        UVElement {
            session: session.clone(),
            terms,
        }
    }

    pub fn session(&self) -> &Arc<EnvelopeSession> {
        &self.session
    }

    pub fn terms(&self) -> &UvTermMap {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &[usize]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Filtration degree; `None` for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.len() == d)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        UVElement {
            session: self.session.clone(),
            terms,
        }
    }

    fn assert_same_session(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.session, &other.session),
            "elements belong to different sessions"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_session(other);
        let mut terms = self.terms.clone();
        terms::add_scaled(&mut terms, &other.terms, &exact_linalg::int(1));
        UVElement {
            session: self.session.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_session(other);
        let mut terms = self.terms.clone();
        terms::add_scaled(&mut terms, &other.terms, &exact_linalg::int(-1));
        UVElement {
            session: self.session.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&exact_linalg::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        UVElement {
            session: self.session.clone(),
            terms: terms::scale(&self.terms, c),
        }
    }

    /// The product of the enveloping algebra: star-multiply the embedded
    /// elements and express the result in the monomial basis again.
    pub fn try_mul(&self, other: &Self) -> Result<Self, StarError> {
        self.assert_same_session(other);
        let x = self.session.embed(self);
        let y = self.session.embed(other);
        let star = self.session.star(&x, &y);
        self.session.normalize(&star)
    }

    /// Panicking wrapper: the subalgebra generated by `V` is closed under
    /// the product, so a normalization failure means a broken invariant.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other)
            .expect("the subalgebra generated by V is closed under the product")
    }

    /// Commutator `uv - vu`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Associator `(uv)w - u(vw)`.
    pub fn associator(&self, v: &Self, w: &Self) -> Self {
        self.mul(v).mul(w).sub(&self.mul(&v.mul(w)))
    }

    /// Coefficient of the empty monomial.
    pub fn counit(&self) -> Scalar {
        self.terms
            .get(&Vec::new())
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// The algebra automorphism extending `a -> -a` on `V`: each monomial
    /// picks up the sign of its length.
    pub fn s_automorphism(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let c = if k.len() % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                };
                (k.clone(), c)
            })
            .collect();
        UVElement {
            session: self.session.clone(),
            terms,
        }
    }

    /// Left division `x \ y = S(x) y`.
    pub fn left_divide(&self, y: &Self) -> Self {
        self.s_automorphism().mul(y)
    }

    /// `x \ 1 = 1 / x = S(x)`.
    pub fn right_unit_divide(&self) -> Self {
        self.s_automorphism()
    }

    /// Coproduct, computed in envelope coordinates and normalized back leg
    /// by leg. Every generator is primitive.
    pub fn coproduct(&self) -> UvTensor {
        let ambient = self.session.embed(self);
        let tensor = ambient.coproduct();
        // First pass: the sum splits over the second envelope leg, and each
        // first-leg fiber lies in the subalgebra.
        let mut fibers: BTreeMap<Vec<usize>, lie_uea::terms::TermMap> = BTreeMap::new();
        for ((m1, m2), c) in tensor.terms() {
            terms::add_term(fibers.entry(m2.clone()).or_default(), m1.clone(), c);
        }
        let mut regrouped: BTreeMap<Vec<usize>, lie_uea::terms::TermMap> = BTreeMap::new();
        for (m2, fiber) in fibers {
            let first = self
                .session
                .normalize(&lie_uea::AssocElement::from_terms(
                    self.session.ambient(),
                    fiber,
                ))
                .expect("coproduct legs of subalgebra elements stay in the subalgebra");
            for (p, c) in first.terms() {
                terms::add_term(regrouped.entry(p.clone()).or_default(), m2.clone(), c);
            }
        }
        // Second pass: each second-leg fiber lies in the subalgebra too.
        let mut out: BTreeMap<(Vec<usize>, Vec<usize>), Scalar> = BTreeMap::new();
        for (p, fiber) in regrouped {
            let second = self
                .session
                .normalize(&lie_uea::AssocElement::from_terms(
                    self.session.ambient(),
                    fiber,
                ))
                .expect("coproduct legs of subalgebra elements stay in the subalgebra");
            for (q, c) in second.terms() {
                terms::add_tensor(&mut out, (p.clone(), q.clone()), c);
            }
        }
        UvTensor {
            session: self.session.clone(),
            terms: out,
        }
    }
}

impl PartialEq for UVElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.session, &other.session) && self.terms == other.terms
    }
}

impl Eq for UVElement {}

impl fmt::Debug for UVElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UVElement({self})")
    }
}

impl fmt::Display for UVElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let system = self.session.system();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(key, c)| {
                if key.is_empty() {
                    format!("{c}")
                } else {
                    let word = key
                        .iter()
                        .map(|&i| system.name(i))
                        .collect::<Vec<_>>()
                        .join("·");
                    format!("{c}·{word}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A tensor-square element with both legs in monomial coordinates.
#[derive(Clone)]
pub struct UvTensor {
    session: Arc<EnvelopeSession>,
    terms: BTreeMap<(Vec<usize>, Vec<usize>), Scalar>,
}

impl UvTensor {
    pub fn session(&self) -> &Arc<EnvelopeSession> {
        &self.session
    }

    pub fn terms(&self) -> &BTreeMap<(Vec<usize>, Vec<usize>), Scalar> {
        &self.terms
    }

    pub fn from_terms(
        session: &Arc<EnvelopeSession>,
        terms: BTreeMap<(Vec<usize>, Vec<usize>), Scalar>,
    ) -> Self {
        UvTensor {
            session: session.clone(),
            terms,
        }
    }
}

impl PartialEq for UvTensor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.session, &other.session) && self.terms == other.terms
    }
}

impl Eq for UvTensor {}

impl fmt::Debug for UvTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| format!("{c}·({a:?} ⊗ {b:?})"))
            .collect();
        write!(f, "UvTensor({})", parts.join(" + "))
    }
}
