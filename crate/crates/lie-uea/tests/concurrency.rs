//! The per-algebra rewrite cache must behave as if absent: concurrent
//! multiplications agree with the single-threaded results.

use std::sync::Arc;

use exact_linalg::Scalar;
use lie_uea::{AssocElement, PbwAlgebra};
use lts_core::{catalog, lie_envelope};
use num_traits::One;

#[test]
fn concurrent_products_match_sequential_ones() {
    let env = lie_envelope(&catalog::so3(), &Scalar::one()).unwrap();
    let shared = PbwAlgebra::new(env.table.clone());
    let fresh = PbwAlgebra::new(env.table);

    let words: Vec<(Vec<usize>, Vec<usize>)> = (0..6usize)
        .flat_map(|a| (0..6usize).map(move |b| (vec![b, a], vec![a, b.min(a)])))
        .collect();

    let expected: Vec<_> = words
        .iter()
        .map(|(w1, w2)| {
            let x = word_element(&fresh, w1);
            let y = word_element(&fresh, w2);
            x.mul(&y).terms().clone()
        })
        .collect();

    let handles: Vec<_> = words
        .iter()
        .cloned()
        .map(|(w1, w2)| {
            let algebra = shared.clone();
            std::thread::spawn(move || {
                let x = word_element(&algebra, &w1);
                let y = word_element(&algebra, &w2);
                x.mul(&y).terms().clone()
            })
        })
        .collect();

    for (handle, want) in handles.into_iter().zip(expected) {
        assert_eq!(handle.join().unwrap(), want);
    }
}

fn word_element(algebra: &Arc<PbwAlgebra>, word: &[usize]) -> AssocElement {
    // Multiply letter by letter so unsorted words exercise the rewriting.
    let mut out = AssocElement::one(algebra);
    for &g in word {
        out = out.mul(&AssocElement::generator(algebra, g));
    }
    out
}
