//! The associative enveloping algebra of a Lie algebra, computed in its
//! ordered-monomial (Poincaré–Birkhoff–Witt) basis.
//!
//! Elements are sparse linear combinations of weakly increasing words in
//! the generators. Products are normalized by repeatedly swapping adjacent
//! out-of-order generators via `g_i g_j = g_j g_i + [g_i, g_j]`; the
//! rewriting is memoized per word, so repeated products over the same
//! algebra amortize well. The coproduct makes every generator primitive
//! and extends multiplicatively.

pub mod terms;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use exact_linalg::Scalar;
use lts_core::LieAlgebraTable;
use num_traits::{One, Zero};

use terms::TermMap;

/// The enveloping algebra of a fixed Lie algebra table. Holds the rewrite
/// cache; the cache only memoizes pure functions, so results are the same
/// as if it were absent.
pub struct PbwAlgebra {
    table: LieAlgebraTable,
    rewrite_cache: Mutex<HashMap<Vec<usize>, TermMap>>,
}

impl fmt::Debug for PbwAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PbwAlgebra")
            .field("dim", &self.table.dim())
            .finish()
    }
}

impl PbwAlgebra {
    pub fn new(table: LieAlgebraTable) -> Arc<Self> {
        Arc::new(PbwAlgebra {
            table,
            rewrite_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn table(&self) -> &LieAlgebraTable {
        &self.table
    }

    pub fn generators(&self) -> usize {
        self.table.dim()
    }

    /// Normal form of an arbitrary word in the generators.
    fn normal_form(&self, word: &[usize]) -> TermMap {
        let mut cache = self.rewrite_cache.lock().unwrap();
        Self::normal_form_rec(&self.table, &mut cache, word)
    }

    fn normal_form_rec(
        table: &LieAlgebraTable,
        cache: &mut HashMap<Vec<usize>, TermMap>,
        word: &[usize],
    ) -> TermMap {
        if let Some(hit) = cache.get(word) {
            return hit.clone();
        }
        let descent = word.windows(2).position(|w| w[0] > w[1]);
        let result = match descent {
            None => {
                let mut t = TermMap::new();
                t.insert(word.to_vec(), Scalar::one());
                t
            }
            Some(i) => {
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                let mut out = Self::normal_form_rec(table, cache, &swapped);
                for (l, c) in table.bracket_sparse(word[i], word[i + 1]) {
                    let mut shorter = Vec::with_capacity(word.len() - 1);
                    shorter.extend_from_slice(&word[..i]);
                    shorter.push(l);
                    shorter.extend_from_slice(&word[i + 2..]);
                    let reduced = Self::normal_form_rec(table, cache, &shorter);
                    terms::add_scaled(&mut out, &reduced, &c);
                }
                out
            }
        };
        cache.insert(word.to_vec(), result.clone());
        result
    }
}

/// An element of the enveloping algebra: a sparse map from weakly
/// increasing generator words to rational coefficients. The empty word is
/// the unit.
#[derive(Clone)]
pub struct AssocElement {
    algebra: Arc<PbwAlgebra>,
    terms: TermMap,
}

impl fmt::Debug for AssocElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AssocElement({})", self)
    }
}

impl fmt::Display for AssocElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(key, c)| {
                if key.is_empty() {
                    format!("{c}")
                } else {
                    let word = key
                        .iter()
                        .map(|&g| self.algebra.table.name(g))
                        .collect::<Vec<_>>()
                        .join("·");
                    format!("{c}·{word}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl PartialEq for AssocElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl Eq for AssocElement {}

impl AssocElement {
    pub fn zero(algebra: &Arc<PbwAlgebra>) -> Self {
        AssocElement {
            algebra: algebra.clone(),
            terms: TermMap::new(),
        }
    }

    pub fn one(algebra: &Arc<PbwAlgebra>) -> Self {
        Self::monomial(algebra, &[])
    }

    pub fn generator(algebra: &Arc<PbwAlgebra>, g: usize) -> Self {
        assert!(g < algebra.generators(), "generator index out of range");
        Self::monomial(algebra, &[g])
    }

    /// A single basis monomial; the word must be weakly increasing.
    pub fn monomial(algebra: &Arc<PbwAlgebra>, word: &[usize]) -> Self {
        assert!(
            word.windows(2).all(|w| w[0] <= w[1]),
            "monomial words must be weakly increasing"
        );
        assert!(
            word.iter().all(|&g| g < algebra.generators()),
            "generator index out of range"
        );
        let mut terms = TermMap::new();
        terms.insert(word.to_vec(), Scalar::one());
        AssocElement {
            algebra: algebra.clone(),
            terms,
        }
    }

    pub fn from_terms(algebra: &Arc<PbwAlgebra>, terms: TermMap) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        debug_assert!(terms.keys().all(|k| k.windows(2).all(|w| w[0] <= w[1])));
        AssocElement {
            algebra: algebra.clone(),
            terms,
        }
    }

    pub fn algebra(&self) -> &Arc<PbwAlgebra> {
        &self.algebra
    }

    pub fn terms(&self) -> &TermMap {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn assert_same_algebra(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.algebra, &other.algebra),
            "elements belong to different ambient algebras"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_algebra(other);
        let mut terms = self.terms.clone();
        terms::add_scaled(&mut terms, &other.terms, &Scalar::one());
        AssocElement {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_algebra(other);
        let mut terms = self.terms.clone();
        terms::add_scaled(&mut terms, &other.terms, &-Scalar::one());
        AssocElement {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        AssocElement {
            algebra: self.algebra.clone(),
            terms: terms::scale(&self.terms, c),
        }
    }

    /// Product in the ordered-monomial normal form. Associative and exact.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_algebra(other);
        let mut out = TermMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut word = Vec::with_capacity(w1.len() + w2.len());
                word.extend_from_slice(w1);
                word.extend_from_slice(w2);
                let normal = self.algebra.normal_form(&word);
                terms::add_scaled(&mut out, &normal, &(c1 * c2));
            }
        }
        AssocElement {
            algebra: self.algebra.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one(&self.algebra);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Commutator `xy - yx`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Filtration degree: the longest word. `None` for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// The part of the element spanned by words of length exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.len() == d)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        AssocElement {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    /// Coefficient of the empty word.
    pub fn counit(&self) -> Scalar {
        self.terms
            .get(&Vec::new())
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn coefficient(&self, word: &[usize]) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coproduct: generators are primitive, and the map extends as an
    /// algebra morphism. On an ordered monomial this is the sum over all
    /// splittings of the multiset of letters, with binomial multiplicities.
    pub fn coproduct(&self) -> TensorElement {
        let mut out = TensorMap::new();
        for (word, c) in &self.terms {
            for (left, right, mult) in terms::splittings(word) {
                terms::add_tensor(&mut out, (left, right), &(c * &mult));
            }
        }
        TensorElement {
            algebra: self.algebra.clone(),
            terms: out,
        }
    }
}

pub type TensorMap = std::collections::BTreeMap<(Vec<usize>, Vec<usize>), Scalar>;

/// An element of the tensor square, with both legs in normal form.
#[derive(Clone)]
pub struct TensorElement {
    algebra: Arc<PbwAlgebra>,
    terms: TensorMap,
}

impl TensorElement {
    pub fn zero(algebra: &Arc<PbwAlgebra>) -> Self {
        TensorElement {
            algebra: algebra.clone(),
            terms: TensorMap::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<PbwAlgebra> {
        &self.algebra
    }

    pub fn terms(&self) -> &TensorMap {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.algebra, &other.algebra));
        let mut terms = self.terms.clone();
        for (key, c) in &other.terms {
            terms::add_tensor(&mut terms, key.clone(), c);
        }
        TensorElement {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.algebra, &other.algebra));
        let mut terms = self.terms.clone();
        for (key, c) in &other.terms {
            terms::add_tensor(&mut terms, key.clone(), &-c.clone());
        }
        TensorElement {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    /// Componentwise product of tensors.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.algebra, &other.algebra));
        let mut out = TensorMap::new();
        for ((a1, a2), c1) in &self.terms {
            let m1 = AssocElement::monomial(&self.algebra, a1);
            let m2 = AssocElement::monomial(&self.algebra, a2);
            for ((b1, b2), c2) in &other.terms {
                let left = m1.mul(&AssocElement::monomial(&self.algebra, b1));
                let right = m2.mul(&AssocElement::monomial(&self.algebra, b2));
                let factor = c1 * c2;
                for (w1, d1) in left.terms() {
                    for (w2, d2) in right.terms() {
                        terms::add_tensor(&mut out, (w1.clone(), w2.clone()), &(&factor * d1 * d2));
                    }
                }
            }
        }
        TensorElement {
            algebra: self.algebra.clone(),
            terms: out,
        }
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| format!("{c}·({a:?} ⊗ {b:?})"))
            .collect();
        write!(f, "TensorElement({})", parts.join(" + "))
    }
}
