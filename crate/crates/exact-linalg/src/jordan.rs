//! Minimal polynomials and the Jordan–Chevalley splitting over the
//! rationals.
//!
//! The semisimple part is found by Newton iteration on the squarefree part
//! of the minimal polynomial. No eigenvalues and no field extensions are
//! involved, so everything stays exact.

use num_traits::Zero;

use crate::matrix::{solve_many, Matrix};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::vecops;

/// Monic minimal polynomial of a square matrix.
pub fn min_poly(m: &Matrix) -> Polynomial {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Polynomial::one();
    }
    // Echelon basis of the span of I, M, M^2, ... with the combination
    // that produced each reduced vector.
    let mut echelon: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    let mut power = Matrix::identity(n);
    for k in 0.. {
        let mut v = power.vectorize();
        let mut combo = vecops::zeros(k + 1);
        combo[k] = crate::scalar::int(1);
        for (row, row_combo) in &echelon {
            let pivot = row.iter().position(|c| !c.is_zero()).unwrap();
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone();
            vecops::add_scaled(&mut v, row, &-factor.clone());
            if combo.len() < row_combo.len() {
                combo.resize(row_combo.len(), Scalar::zero());
            }
            for (c, rc) in combo.iter_mut().zip(row_combo) {
                *c -= &factor * rc;
            }
        }
        if vecops::is_zero(&v) {
            // combo expresses 0 = sum combo_i M^i with combo_k = 1.
            return Polynomial::from_coeffs(combo);
        }
        let pivot = v.iter().position(|c| !c.is_zero()).unwrap();
        let inv = v[pivot].recip();
        let v = vecops::scale(&v, &inv);
        let combo = vecops::scale(&combo, &inv);
        echelon.push((v, combo));
        power = power.mul(m);
    }
    unreachable!("a dependence appears by degree rows^2")
}

/// Split `M = Ms + Mn` with `Ms` semisimple over the rationals, `Mn`
/// nilpotent, and `Ms Mn = Mn Ms`.
pub fn jordan_chevalley(m: &Matrix) -> (Matrix, Matrix) {
    assert!(m.is_square(), "splitting of a non-square matrix");
    if m.rows() == 0 {
        return (m.clone(), m.clone());
    }
    let f = min_poly(m).squarefree_part();
    let fp = f.derivative();
    let mut x = m.clone();
    // Newton iteration converges quadratically; rows+2 steps is generous.
    for _ in 0..m.rows() + 2 {
        let fx = f.eval_matrix(&x);
        if fx.is_zero() {
            let nil = m.sub(&x);
            return (x, nil);
        }
        // f'(x) is invertible: its eigenvalues are f' at roots of the
        // squarefree f, none of which vanish.
        let fpx = fp.eval_matrix(&x);
        let delta = solve_many(&fpx, &fx).expect("f'(x) invertible on Newton iterates");
        x = x.sub(&delta);
    }
    panic!("Newton iteration for the semisimple part did not converge");
}
