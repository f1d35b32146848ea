//! The leading-term formula for commutators with a generator: for a
//! monomial `r` and `a` in `V`,
//!
//! ```text
//! ar - ra = (1/2) sum_{i,j} [a, x_i, x_j] d/dx_i d/dx_j r  + lower terms
//! ```
//!
//! where the partial derivatives act formally on the exponent vector of
//! the right-normed monomial. The predicted part is the entire component
//! of degree `deg r - 1`.

use std::collections::BTreeMap;
use std::sync::Arc;

use exact_linalg::{ratio, vecops, Scalar};
use lts_core::TernarySystem;
use num_traits::Zero;
use star_uea::{EnvelopeSession, UVElement};

/// Prediction for the top part of `a m - m a`, as a sparse term map over
/// monomial multi-indices.
pub fn leading_commutator_prediction(
    system: &TernarySystem,
    a: &[Scalar],
    monomial: &[usize],
) -> BTreeMap<Vec<usize>, Scalar> {
    let n = system.dim();
    assert_eq!(a.len(), n, "coordinate length mismatch");
    let mut exponents = vec![0usize; n];
    for &i in monomial {
        exponents[i] += 1;
    }
    let half = ratio(1, 2);
    let mut out: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            // d/dx_i d/dx_j of the exponent vector.
            let factor = if i == j {
                exponents[i] * exponents[i].saturating_sub(1)
            } else {
                exponents[i] * exponents[j]
            };
            if factor == 0 {
                continue;
            }
            let bracket = system.bracket_eval(a, &vecops::unit(n, i), &vecops::unit(n, j));
            if vecops::is_zero(&bracket) {
                continue;
            }
            let mut reduced = exponents.clone();
            reduced[i] -= 1;
            reduced[j] -= 1;
            let scale = &half * exact_linalg::int(factor as i64);
            for (l, c) in bracket.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut key_exponents = reduced.clone();
                key_exponents[l] += 1;
                let key = exponents_to_key(&key_exponents);
                let entry = out.entry(key).or_insert_with(Scalar::zero);
                *entry += &scale * c;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn exponents_to_key(exponents: &[usize]) -> Vec<usize> {
    let mut key = Vec::new();
    for (i, &e) in exponents.iter().enumerate() {
        key.extend(std::iter::repeat(i).take(e));
    }
    key
}

/// The prediction as an element of the enveloping algebra.
pub fn prediction_element(
    session: &Arc<EnvelopeSession>,
    a: &[Scalar],
    monomial: &[usize],
) -> UVElement {
    let terms = leading_commutator_prediction(session.system(), a, monomial);
    let mut out = session.uv_zero();
    for (key, c) in terms {
        out = out.add(&session.uv_monomial(&key).scale(&c));
    }
    out
}
