//! The decomposition checker: for a commuting subsystem of the left
//! generalized alternative nucleus that generates the algebra, split the
//! algebra into the unital algebra of semisimple parts and the ideal of
//! nilpotent parts, and verify every claim of the decomposition.

use exact_linalg::{nullspace, vecops, Matrix, Scalar};
use lts_core::{lower_central_series, SeriesMode, SubspaceBasis};
use num_traits::Zero;

use crate::algebra::FinAlgebra;
use crate::jc::jc_element;
use crate::nuclei::{induced_system, nuclei};
use crate::tder::lnalt_membership_via_tder;
use crate::NucleusError;

#[derive(Clone, Debug)]
pub struct DecomposeReport {
    /// The subsystem enlarged by all semisimple and nilpotent parts.
    pub v_hat: SubspaceBasis,
    /// Unital subalgebra generated by the semisimple parts.
    pub q: SubspaceBasis,
    /// Ideal generated by the nilpotent parts.
    pub r: SubspaceBasis,
    pub v_nilpotent: bool,
    pub sum_spans: bool,
    pub sum_direct: bool,
    pub r_nilpotent: bool,
    pub q_central: bool,
    pub q_nilpotent_free: bool,
}

impl DecomposeReport {
    pub fn all_pass(&self) -> bool {
        self.v_nilpotent
            && self.sum_spans
            && self.sum_direct
            && self.r_nilpotent
            && self.q_central
            && self.q_nilpotent_free
    }

    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("subsystem-nilpotent", self.v_nilpotent),
            ("sum-spans", self.sum_spans),
            ("sum-direct", self.sum_direct),
            ("nilpotent-ideal", self.r_nilpotent),
            ("central-part", self.q_central),
            ("no-nilpotents-in-central-part", self.q_nilpotent_free),
        ]
    }
}

pub fn theorem_decompose(
    a: &FinAlgebra,
    v: &SubspaceBasis,
) -> Result<DecomposeReport, NucleusError> {
    assert_eq!(v.ambient_dim(), a.dim(), "subspace ambient mismatch");
    // Hypotheses: V inside the nucleus, commuting, generating.
    for vec in v.vectors() {
        if !lnalt_membership_via_tder(a, vec) {
            return Err(NucleusError::PreconditionViolated(
                "subspace is not contained in the left generalized alternative nucleus".into(),
            ));
        }
    }
    for x in v.vectors() {
        for y in v.vectors() {
            if a.mul(x, y) != a.mul(y, x) {
                return Err(NucleusError::PreconditionViolated(
                    "subspace elements do not commute pairwise".into(),
                ));
            }
        }
    }
    if !a.subalgebra_closure(v.vectors(), true).is_full() {
        return Err(NucleusError::PreconditionViolated(
            "subspace does not generate the algebra as a unital algebra".into(),
        ));
    }

    // Nilpotency of the induced triple system; reported, not required, so
    // the contrapositive direction of the decomposition is visible too.
    let induced = induced_system(a, v)?;
    let v_nilpotent = lower_central_series(&induced, SeriesMode::Nilpotency).verdict;

    let mut s_parts = Vec::new();
    let mut n_parts = Vec::new();
    for vec in v.vectors() {
        let (a_s, a_n) = jc_element(a, vec)?;
        if !vecops::is_zero(&a_s) {
            s_parts.push(a_s);
        }
        if !vecops::is_zero(&a_n) {
            n_parts.push(a_n);
        }
    }
    let mut hat_spanning = s_parts.clone();
    hat_spanning.extend(n_parts.iter().cloned());
    hat_spanning.extend(v.vectors().iter().cloned());
    let v_hat = SubspaceBasis::from_spanning(a.dim(), hat_spanning);

    let q = a.subalgebra_closure(&s_parts, true);
    let r = if n_parts.is_empty() {
        SubspaceBasis::empty(a.dim())
    } else {
        a.ideal_generated_by(&n_parts)
    };

    let sum = q.sum(&r);
    let sum_spans = sum.is_full();
    let sum_direct = q.dim() + r.dim() == sum.dim();
    let r_nilpotent = r.is_zero_space() || a.is_nilpotent_span(&r);
    let center = nuclei(a).center;
    let q_central = q.vectors().iter().all(|x| center.contains(x));
    let q_nilpotent_free = q_central && commutative_part_is_reduced(a, &q);

    Ok(DecomposeReport {
        v_hat,
        q,
        r,
        v_nilpotent,
        sum_spans,
        sum_direct,
        r_nilpotent,
        q_central,
        q_nilpotent_free,
    })
}

/// A commutative associative algebra over a characteristic-zero field has
/// no nonzero nilpotents iff its multiplication trace form is
/// non-degenerate. `q` must be closed under the product and central.
fn commutative_part_is_reduced(a: &FinAlgebra, q: &SubspaceBasis) -> bool {
    let m = q.dim();
    if m == 0 {
        return true;
    }
    let basis = q.vectors();
    // Multiplication table of q in its own coordinates.
    let mut local = vec![vec![vecops::zeros(m); m]; m];
    for p in 0..m {
        for s in 0..m {
            let prod = a.mul(&basis[p], &basis[s]);
            match q.coordinates(&prod) {
                Some(coords) => local[p][s] = coords,
                // Not closed: the centrality check already failed.
                None => return false,
            }
        }
    }
    let trace_of_mult = |coords: &[Scalar]| -> Scalar {
        // Trace of multiplication by the element with these q-coordinates.
        let mut t = Scalar::zero();
        for s in 0..m {
            let mut col = vecops::zeros(m);
            for (p, c) in coords.iter().enumerate() {
                vecops::add_scaled(&mut col, &local[p][s], c);
            }
            t += col[s].clone();
        }
        t
    };
    let mut gram = Matrix::zero(m, m);
    for p in 0..m {
        for s in 0..m {
            gram.set(p, s, trace_of_mult(&local[p][s]));
        }
    }
    nullspace(&gram).is_empty()
}
