//! Semisimple and nilpotent parts of elements of the left generalized
//! alternative nucleus: the splitting of the left multiplication operator
//! descends to the element through the unit.

use exact_linalg::{jordan_chevalley, Scalar};

use crate::algebra::FinAlgebra;
use crate::tder::lnalt_membership_via_tder;
use crate::NucleusError;

/// For `a` in the left generalized alternative nucleus, produce
/// `(a_s, a_n)` with `a = a_s + a_n`, `L_{a_s}` and `L_{a_n}` the
/// semisimple and nilpotent parts of `L_a`, and both parts again in the
/// nucleus. Postconditions are re-verified; a failure means the table
/// violates the structure theory and is reported as an error.
pub fn jc_element(
    a: &FinAlgebra,
    element: &[Scalar],
) -> Result<(Vec<Scalar>, Vec<Scalar>), NucleusError> {
    if !lnalt_membership_via_tder(a, element) {
        return Err(NucleusError::NotInLnAlt);
    }
    let left = a.left_mult(element);
    let (ms, mn) = jordan_chevalley(&left);
    let a_s = ms.mul_vec(a.unit());
    let a_n = mn.mul_vec(a.unit());
    if a.left_mult(&a_s) != ms {
        return Err(NucleusError::JordanChevalleyPostcondition(
            "left multiplication by the semisimple part differs from the operator part".into(),
        ));
    }
    if a.left_mult(&a_n) != mn {
        return Err(NucleusError::JordanChevalleyPostcondition(
            "left multiplication by the nilpotent part differs from the operator part".into(),
        ));
    }
    if !lnalt_membership_via_tder(a, &a_s) || !lnalt_membership_via_tder(a, &a_n) {
        return Err(NucleusError::JordanChevalleyPostcondition(
            "a part leaves the left generalized alternative nucleus".into(),
        ));
    }
    Ok((a_s, a_n))
}
