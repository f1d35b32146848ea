//! Associative nuclei, the center, and the left generalized alternative
//! nucleus with its induced triple system.

use exact_linalg::{nullspace, vecops, Matrix, Scalar};
use lts_core::{SubspaceBasis, TernarySystem};

use crate::algebra::FinAlgebra;
use crate::NucleusError;

#[derive(Clone, Debug)]
pub struct Nuclei {
    pub left: SubspaceBasis,
    pub middle: SubspaceBasis,
    pub right: SubspaceBasis,
    pub center: SubspaceBasis,
}

enum Slot {
    Left,
    Middle,
    Right,
}

/// Rows of the linear system cutting out one associative nucleus.
fn associator_rows(a: &FinAlgebra, slot: &Slot) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let ej = vecops::unit(n, j);
            let ek = vecops::unit(n, k);
            // One block of rows per basis pair; columns index the unknown.
            let mut block = vec![vecops::zeros(n); n];
            for i in 0..n {
                let ei = vecops::unit(n, i);
                let assoc = match slot {
                    Slot::Left => a.associator(&ei, &ej, &ek),
                    Slot::Middle => a.associator(&ej, &ei, &ek),
                    Slot::Right => a.associator(&ej, &ek, &ei),
                };
                for (l, c) in assoc.into_iter().enumerate() {
                    block[l][i] = c;
                }
            }
            rows.extend(block.into_iter().filter(|r| !vecops::is_zero(r)));
        }
    }
    rows
}

fn commutation_rows(a: &FinAlgebra) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        let ej = vecops::unit(n, j);
        let mut block = vec![vecops::zeros(n); n];
        for i in 0..n {
            let ei = vecops::unit(n, i);
            let comm = vecops::sub(&a.mul(&ei, &ej), &a.mul(&ej, &ei));
            for (l, c) in comm.into_iter().enumerate() {
                block[l][i] = c;
            }
        }
        rows.extend(block.into_iter().filter(|r| !vecops::is_zero(r)));
    }
    rows
}

fn solution_space(dim: usize, rows: Vec<Vec<Scalar>>) -> SubspaceBasis {
    if rows.is_empty() {
        return SubspaceBasis::full(dim);
    }
    SubspaceBasis::from_spanning(dim, nullspace(&Matrix::from_rows(rows)))
}

/// The three associative nuclei and the center (commuting elements that
/// lie in all three nuclei).
pub fn nuclei(a: &FinAlgebra) -> Nuclei {
    let n = a.dim();
    let left_rows = associator_rows(a, &Slot::Left);
    let middle_rows = associator_rows(a, &Slot::Middle);
    let right_rows = associator_rows(a, &Slot::Right);
    let left = solution_space(n, left_rows.clone());
    let middle = solution_space(n, middle_rows.clone());
    let right = solution_space(n, right_rows.clone());
    let mut center_rows = commutation_rows(a);
    center_rows.extend(left_rows);
    center_rows.extend(middle_rows);
    center_rows.extend(right_rows);
    let center = solution_space(n, center_rows);
    Nuclei {
        left,
        middle,
        right,
        center,
    }
}

/// The full generalized alternative nucleus
/// `{a : (a,x,y) = -(x,a,y) = (x,y,a) for all x,y}`. Its elements carry
/// the Malcev bracket `[a,b] = ab - ba`.
pub fn n_alt(a: &FinAlgebra) -> SubspaceBasis {
    let n = a.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let ej = vecops::unit(n, j);
            let ek = vecops::unit(n, k);
            let mut left_block = vec![vecops::zeros(n); n];
            let mut right_block = vec![vecops::zeros(n); n];
            for i in 0..n {
                let ei = vecops::unit(n, i);
                let left = vecops::add(&a.associator(&ei, &ej, &ek), &a.associator(&ej, &ei, &ek));
                let right = vecops::sub(&a.associator(&ei, &ej, &ek), &a.associator(&ej, &ek, &ei));
                for (l, c) in left.into_iter().enumerate() {
                    left_block[l][i] = c;
                }
                for (l, c) in right.into_iter().enumerate() {
                    right_block[l][i] = c;
                }
            }
            rows.extend(left_block.into_iter().filter(|r| !vecops::is_zero(r)));
            rows.extend(right_block.into_iter().filter(|r| !vecops::is_zero(r)));
        }
    }
    solution_space(n, rows)
}

/// The left generalized alternative nucleus
/// `{a : (a,x,y) = -(x,a,y) for all x,y}`, together with the triple
/// system it carries under `[a,b,c] = a(bc) - b(ac) - c(ab) + c(ba)`.
pub fn ln_alt(a: &FinAlgebra) -> Result<(SubspaceBasis, TernarySystem), NucleusError> {
    let n = a.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let ej = vecops::unit(n, j);
            let ek = vecops::unit(n, k);
            let mut block = vec![vecops::zeros(n); n];
            for i in 0..n {
                let ei = vecops::unit(n, i);
                let sum = vecops::add(&a.associator(&ei, &ej, &ek), &a.associator(&ej, &ei, &ek));
                for (l, c) in sum.into_iter().enumerate() {
                    block[l][i] = c;
                }
            }
            rows.extend(block.into_iter().filter(|r| !vecops::is_zero(r)));
        }
    }
    let subspace = solution_space(n, rows);
    let induced = induced_system(a, &subspace)?;
    Ok((subspace, induced))
}

/// The bracket `a(bc) - b(ac) - c(ab) + c(ba)` restricted to a subspace,
/// in the subspace's own coordinates.
pub fn induced_system(
    a: &FinAlgebra,
    subspace: &SubspaceBasis,
) -> Result<TernarySystem, NucleusError> {
    let m = subspace.dim();
    let mut system = TernarySystem::new(m);
    let basis = subspace.vectors();
    for p in 0..m {
        for q in 0..m {
            for r in 0..m {
                let (x, y, z) = (&basis[p], &basis[q], &basis[r]);
                let mut w = a.mul(x, &a.mul(y, z));
                let t2 = a.mul(y, &a.mul(x, z));
                let t3 = a.mul(z, &a.mul(x, y));
                let t4 = a.mul(z, &a.mul(y, x));
                for l in 0..a.dim() {
                    w[l] = &w[l] - &t2[l] - &t3[l] + &t4[l];
                }
                if vecops::is_zero(&w) {
                    continue;
                }
                let coords = subspace
                    .coordinates(&w)
                    .ok_or(NucleusError::InducedBracketNotClosed)?;
                system.set_ternary(p, q, r, &coords)?;
            }
        }
    }
    Ok(system)
}
