//! Ternary derivations: triples `(d1, d2, d3)` with
//! `d1(xy) = d2(x) y + x d3(y)`.

use exact_linalg::{vecops, Matrix};

use crate::algebra::FinAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryDerivation {
    pub d1: Matrix,
    pub d2: Matrix,
    pub d3: Matrix,
}

impl TernaryDerivation {
    pub fn new(d1: Matrix, d2: Matrix, d3: Matrix) -> Self {
        TernaryDerivation { d1, d2, d3 }
    }

    pub fn zero(dim: usize) -> Self {
        TernaryDerivation {
            d1: Matrix::zero(dim, dim),
            d2: Matrix::zero(dim, dim),
            d3: Matrix::zero(dim, dim),
        }
    }
}

/// Check the defining identity on all basis pairs.
pub fn check_tder(a: &FinAlgebra, t: &TernaryDerivation) -> bool {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let ei = vecops::unit(n, i);
            let ej = vecops::unit(n, j);
            let lhs = t.d1.mul_vec(a.product_basis(i, j));
            let rhs = vecops::add(
                &a.mul(&t.d2.mul_vec(&ei), &ej),
                &a.mul(&ei, &t.d3.mul_vec(&ej)),
            );
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Membership in the left generalized alternative nucleus, phrased as the
/// ternary-derivation condition `(L_a, L_a + R_a, -L_a)`.
pub fn lnalt_membership_via_tder(a: &FinAlgebra, candidate: &[exact_linalg::Scalar]) -> bool {
    let left = a.left_mult(candidate);
    let right = a.right_mult(candidate);
    let t = TernaryDerivation::new(left.clone(), left.add(&right), left.neg());
    check_tder(a, &t)
}
