//! Bounded-degree nucleus computations in the enveloping algebra: the
//! left and middle associative nuclei cut out the same subspace of the
//! degree-filtered piece, and a generator whose left multiplications all
//! commute is central at bounded degree.

use std::collections::BTreeMap;
use std::sync::Arc;

use exact_linalg::{nullspace, vecops, Matrix};
use lts_core::{catalog, SubspaceBasis};
use star_uea::{EnvelopeSession, UVElement};

fn keys_up_to(session: &EnvelopeSession, max_deg: usize) -> Vec<Vec<usize>> {
    let n = session.dim_v();
    let mut keys: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_deg {
        let mut next = Vec::new();
        for key in &frontier {
            let lo = key.last().copied().unwrap_or(0);
            for i in lo..n {
                let mut longer = key.clone();
                longer.push(i);
                next.push(longer);
            }
        }
        keys.extend(next.iter().cloned());
        frontier = next;
    }
    keys.sort();
    keys
}

/// Stack the linear conditions `associator(ARGS with y in `slot`) = 0`
/// over all monomial pairs of degree <= bound, for unknown y of degree
/// <= bound; return the solution space in monomial coordinates.
fn nucleus_solutions(session: &Arc<EnvelopeSession>, bound: usize, slot: usize) -> SubspaceBasis {
    let keys = keys_up_to(session, bound);
    let basis: Vec<UVElement> = keys.iter().map(|k| session.uv_monomial(k)).collect();
    let mut rows: Vec<Vec<exact_linalg::Scalar>> = Vec::new();
    let mut row_of_output: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    // Row blocks indexed by (pair, output monomial); built sparsely.
    let mut conditions: Vec<BTreeMap<usize, exact_linalg::Scalar>> = Vec::new();
    for u in &basis {
        for w in &basis {
            let mut per_output: BTreeMap<Vec<usize>, BTreeMap<usize, exact_linalg::Scalar>> =
                BTreeMap::new();
            for (col, y) in basis.iter().enumerate() {
                let assoc = match slot {
                    0 => y.associator(u, w),
                    1 => u.associator(y, w),
                    _ => u.associator(w, y),
                };
                for (out_key, c) in assoc.terms() {
                    per_output
                        .entry(out_key.clone())
                        .or_default()
                        .insert(col, c.clone());
                }
            }
            for (out_key, row) in per_output {
                let _ = row_of_output.entry(out_key).or_insert(conditions.len());
                conditions.push(row);
            }
        }
    }
    let ncols = basis.len();
    for sparse in conditions {
        let mut row = vecops::zeros(ncols);
        for (col, c) in sparse {
            row[col] = c;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return SubspaceBasis::full(ncols);
    }
    let m = Matrix::from_rows(rows);
    SubspaceBasis::from_spanning(ncols, nullspace(&m))
}

#[test]
fn left_and_middle_nuclei_agree_at_bounded_degree() {
    for (name, t) in [("S2", catalog::s2()), ("abelian:2", catalog::abelian(2))] {
        let s = EnvelopeSession::new(t).unwrap();
        let left = nucleus_solutions(&s, 3, 0);
        let middle = nucleus_solutions(&s, 3, 1);
        assert_eq!(left, middle, "nucleus spaces differ over {name}");
        if name == "abelian:2" {
            // A commutative associative algebra is its own nucleus.
            assert!(left.is_full());
        }
    }
}

#[test]
fn commuting_left_multiplications_force_centrality() {
    // In S2 + abelian line, the extra generator has vanishing brackets.
    let t = catalog::direct_sum(&catalog::s2(), &catalog::abelian(1));
    let s = EnvelopeSession::new(t).unwrap();
    let central_candidate = 2usize;
    let a = s.uv_generator(central_candidate);
    let keys = keys_up_to(&s, 3);

    // Hypothesis: [L_a, L_b] = 0 on the bounded piece for all basis b.
    for b in 0..s.dim_v() {
        let vb = s.uv_generator(b);
        for key in &keys {
            let x = s.uv_monomial(key);
            let lhs = a.mul(&vb.mul(&x)).sub(&vb.mul(&a.mul(&x)));
            assert!(lhs.is_zero(), "hypothesis fails at b={b}, key={key:?}");
        }
    }

    // Conclusion: a commutes and associates with the bounded monomials.
    for key in &keys {
        let x = s.uv_monomial(key);
        assert_eq!(a.mul(&x), x.mul(&a), "commutation fails at {key:?}");
    }
    for m in &keys {
        for w in &keys {
            let xm = s.uv_monomial(m);
            let xw = s.uv_monomial(w);
            assert!(a.associator(&xm, &xw).is_zero());
            assert!(xm.associator(&a, &xw).is_zero());
            assert!(xm.associator(&xw, &a).is_zero());
        }
    }

    // Control: the simple-part generators are not central.
    let e = s.uv_generator(0);
    let f = s.uv_generator(1);
    let witness = e.mul(&f.mul(&e)).sub(&f.mul(&e.mul(&e)));
    assert!(!witness.is_zero());
}
