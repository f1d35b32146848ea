//! Sessions: one triple system, its rescaled Lie envelope, and the cached
//! star-product machinery.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use exact_linalg::{int, two_pow, Scalar};
use lie_uea::terms::{self, TermMap};
use lie_uea::{AssocElement, PbwAlgebra};
use lts_core::{check_axioms, lie_envelope, AxiomMode, LieEnvelope, TernarySystem};
use num_traits::Zero;

use crate::element::{UVElement, UvTermMap};
use crate::StarError;

pub struct EnvelopeSession {
    system: TernarySystem,
    envelope: LieEnvelope,
    algebra: Arc<PbwAlgebra>,
    /// Right-normed star monomials of `V`, expressed in envelope
    /// coordinates, keyed by the `V` multi-index.
    embed_cache: Mutex<HashMap<Vec<usize>, TermMap>>,
    /// The inverse of `q` on single envelope monomials.
    r_cache: Mutex<HashMap<Vec<usize>, TermMap>>,
}

impl fmt::Debug for EnvelopeSession {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EnvelopeSession")
            .field("dim_v", &self.system.dim())
            .field("dim_envelope", &self.envelope.table.dim())
            .finish()
    }
}

impl EnvelopeSession {
    /// Validate the system and set up the rescaled envelope.
    pub fn new(system: TernarySystem) -> Result<Arc<Self>, StarError> {
        if !system.binary_is_zero() {
            return Err(StarError::NonzeroBinaryBracket);
        }
        let report = check_axioms(&system, AxiomMode::Lts)?;
        if let Some(check) = report.checks.iter().find(|c| !c.passed()) {
            return Err(StarError::AxiomsFailed {
                axiom: check.axiom.to_string(),
            });
        }
        let envelope = lie_envelope(&system, &int(4))?;
        let algebra = PbwAlgebra::new(envelope.table.clone());
        Ok(Arc::new(EnvelopeSession {
            system,
            envelope,
            algebra,
            embed_cache: Mutex::new(HashMap::new()),
            r_cache: Mutex::new(HashMap::new()),
        }))
    }

    pub fn system(&self) -> &TernarySystem {
        &self.system
    }

    pub fn envelope(&self) -> &LieEnvelope {
        &self.envelope
    }

    /// The enveloping algebra of the envelope, i.e. the ambient space the
    /// star product lives on.
    pub fn ambient(&self) -> &Arc<PbwAlgebra> {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.system.dim()
    }

    /// The image of the `i`-th basis vector of `V` in the ambient algebra.
    pub fn v_generator(&self, i: usize) -> AssocElement {
        AssocElement::generator(&self.algebra, self.envelope.v_index(i))
    }

    /// `q(x) = sum x_(1) x_(2)`.
    pub fn q_map(&self, x: &AssocElement) -> AssocElement {
        let mut out = TermMap::new();
        for (word, c) in x.terms() {
            let q_word = Self::q_of_word(&self.algebra, word);
            terms::add_scaled(&mut out, &q_word, c);
        }
        AssocElement::from_terms(&self.algebra, out)
    }

    fn q_of_word(algebra: &Arc<PbwAlgebra>, word: &[usize]) -> TermMap {
        let mut out = TermMap::new();
        for (left, right, mult) in terms::splittings(word) {
            let product = AssocElement::monomial(algebra, &left)
                .mul(&AssocElement::monomial(algebra, &right));
            terms::add_scaled(&mut out, product.terms(), &mult);
        }
        out
    }

    /// The inverse of `q`, computed degree by degree. On a monomial of
    /// degree `n`, `q` is `2^n` times the identity plus terms of lower
    /// filtration degree, so the triangular system solves by substitution.
    pub fn r_map(&self, x: &AssocElement) -> AssocElement {
        let mut cache = self.r_cache.lock().unwrap();
        let mut out = TermMap::new();
        for (word, c) in x.terms() {
            let r_word = Self::r_of_word(&self.algebra, &mut cache, word);
            terms::add_scaled(&mut out, &r_word, c);
        }
        AssocElement::from_terms(&self.algebra, out)
    }

    fn r_of_word(
        algebra: &Arc<PbwAlgebra>,
        cache: &mut HashMap<Vec<usize>, TermMap>,
        word: &[usize],
    ) -> TermMap {
        if let Some(hit) = cache.get(word) {
            return hit.clone();
        }
        let n = word.len();
        let result = if n == 0 {
            let mut t = TermMap::new();
            t.insert(Vec::new(), int(1));
            t
        } else {
            // residual = q(word) - 2^n word has degree < n.
            let mut residual = Self::q_of_word(algebra, word);
            terms::add_term(&mut residual, word.to_vec(), &-two_pow(n as i64));
            debug_assert!(residual.keys().all(|k| k.len() < n));
            let mut out = TermMap::new();
            out.insert(word.to_vec(), int(1));
            for (lower, c) in residual {
                let r_lower = Self::r_of_word(algebra, cache, &lower);
                terms::add_scaled(&mut out, &r_lower, &-c);
            }
            terms::scale(&out, &two_pow(-(n as i64)))
        };
        cache.insert(word.to_vec(), result.clone());
        result
    }

    /// The star product `x * y = sum r(x_(1)) y r(x_(2))`. Because `r` is
    /// a coalgebra morphism, the coproduct legs can be taken after a single
    /// application of `r`.
    pub fn star(&self, x: &AssocElement, y: &AssocElement) -> AssocElement {
        let rx = self.r_map(x);
        let mut out = AssocElement::zero(&self.algebra);
        for (word, c) in rx.terms() {
            for (left, right, mult) in terms::splittings(word) {
                let factor = c * &mult;
                let term = AssocElement::monomial(&self.algebra, &left)
                    .mul(y)
                    .mul(&AssocElement::monomial(&self.algebra, &right));
                out = out.add(&term.scale(&factor));
            }
        }
        out
    }

    /// Envelope coordinates of the right-normed star monomial
    /// `a_{i_1} * (a_{i_2} * (... ))` for a weakly increasing `V`
    /// multi-index. Memoized per suffix.
    pub fn embed_monomial(&self, key: &[usize]) -> AssocElement {
        assert!(
            key.windows(2).all(|w| w[0] <= w[1]),
            "multi-indices must be weakly increasing"
        );
        for start in (0..=key.len()).rev() {
            let suffix = &key[start..];
            {
                let cache = self.embed_cache.lock().unwrap();
                if cache.contains_key(suffix) {
                    continue;
                }
            }
            let value = if suffix.is_empty() {
                AssocElement::one(&self.algebra)
            } else {
                let rest = {
                    let cache = self.embed_cache.lock().unwrap();
                    AssocElement::from_terms(&self.algebra, cache[&suffix[1..]].clone())
                };
                self.star(&self.v_generator(suffix[0]), &rest)
            };
            self.embed_cache
                .lock()
                .unwrap()
                .insert(suffix.to_vec(), value.terms().clone());
        }
        let cache = self.embed_cache.lock().unwrap();
        AssocElement::from_terms(&self.algebra, cache[key].clone())
    }

    /// Envelope coordinates of a whole element.
    pub fn embed(&self, u: &UVElement) -> AssocElement {
        let mut out = AssocElement::zero(&self.algebra);
        for (key, c) in u.terms() {
            out = out.add(&self.embed_monomial(key).scale(c));
        }
        out
    }

    /// Coordinates of `x` in the embedded ordered-monomial basis.
    ///
    /// The embedding is triangular for the filtration: the top-degree part
    /// of an embedded monomial is the plain product of its `V` letters and
    /// nothing else. Peeling the top degree and subtracting whole embedded
    /// monomials therefore solves the triangular system exactly; an
    /// envelope letter surviving in a top-degree term signals that `x` is
    /// not in the subalgebra generated by `V`.
    pub fn normalize(self: &Arc<Self>, x: &AssocElement) -> Result<UVElement, StarError> {
        let d_dim = self.envelope.d_dim;
        let mut rem = x.clone();
        let mut out = UvTermMap::new();
        while let Some(degree) = rem.degree() {
            let top = rem.homogeneous_part(degree);
            let mut pieces: Vec<(Vec<usize>, Scalar)> = Vec::new();
            for (word, c) in top.terms() {
                if word.iter().any(|&g| g < d_dim) {
                    return Err(StarError::NotInSubalgebra);
                }
                let key: Vec<usize> = word.iter().map(|&g| g - d_dim).collect();
                pieces.push((key, c.clone()));
            }
            for (key, c) in pieces {
                terms::add_term(&mut out, key.clone(), &c);
                rem = rem.sub(&self.embed_monomial(&key).scale(&c));
            }
            debug_assert!(rem.degree().map_or(true, |d| d < degree));
        }
        Ok(UVElement::from_terms(self, out))
    }

    pub fn uv_zero(self: &Arc<Self>) -> UVElement {
        UVElement::from_terms(self, UvTermMap::new())
    }

    pub fn uv_one(self: &Arc<Self>) -> UVElement {
        self.uv_monomial(&[])
    }

    pub fn uv_generator(self: &Arc<Self>, i: usize) -> UVElement {
        assert!(i < self.dim_v(), "generator index out of range");
        self.uv_monomial(&[i])
    }

    /// A single right-normed basis monomial of the enveloping algebra.
    pub fn uv_monomial(self: &Arc<Self>, key: &[usize]) -> UVElement {
        assert!(
            key.windows(2).all(|w| w[0] <= w[1]),
            "multi-indices must be weakly increasing"
        );
        assert!(
            key.iter().all(|&i| i < self.dim_v()),
            "basis index out of range"
        );
        let mut terms = UvTermMap::new();
        terms.insert(key.to_vec(), int(1));
        UVElement::from_terms(self, terms)
    }

    pub fn uv_from_coords(self: &Arc<Self>, v: &[Scalar]) -> UVElement {
        assert_eq!(v.len(), self.dim_v(), "coordinate length mismatch");
        let mut terms = UvTermMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(vec![i], c.clone());
            }
        }
        UVElement::from_terms(self, terms)
    }

    /// The precession map `delta_{x,y}(z) = sum (x_(1) y_(1)) \ (x_(2) (y_(2) z))`.
    /// On a pair of system elements it is half the ternary bracket.
    pub fn delta_map(self: &Arc<Self>, x: &UVElement, y: &UVElement, z: &UVElement) -> UVElement {
        let dx = x.coproduct();
        let dy = y.coproduct();
        let mut out = self.uv_zero();
        for ((x1, x2), cx) in dx.terms() {
            let x1 = self.uv_monomial(x1);
            let x2 = self.uv_monomial(x2);
            for ((y1, y2), cy) in dy.terms() {
                let y1 = self.uv_monomial(y1);
                let y2 = self.uv_monomial(y2);
                let left = x1.mul(&y1);
                let right = x2.mul(&y2.mul(z));
                out = out.add(&left.left_divide(&right).scale(&(cx * cy)));
            }
        }
        out
    }

    /// Evaluate the ternary bracket of the underlying system on
    /// coordinate vectors, as an element of degree one.
    pub fn bracket_as_element(
        self: &Arc<Self>,
        a: &[Scalar],
        b: &[Scalar],
        c: &[Scalar],
    ) -> UVElement {
        let v = self.system.bracket_eval(a, b, c);
        self.uv_from_coords(&v)
    }
}
