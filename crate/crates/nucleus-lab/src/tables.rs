//! Worked multiplication tables used by the tests and the command line.

use exact_linalg::{int, vecops};

use crate::algebra::FinAlgebra;

/// `F[x]/(x^n)` on the basis `1, x, ..., x^{n-1}`.
pub fn truncated_poly(n: usize) -> FinAlgebra {
    assert!(n >= 1);
    let mut table = vec![vec![vecops::zeros(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                table[i][j][i + j] = int(1);
            }
        }
    }
    FinAlgebra::new(table, vecops::unit(n, 0)).unwrap()
}

/// `F x F` with componentwise product; the unit is `(1, 1)`.
pub fn f_times_f() -> FinAlgebra {
    let mut table = vec![vec![vecops::zeros(2); 2]; 2];
    table[0][0][0] = int(1);
    table[1][1][1] = int(1);
    FinAlgebra::new(table, vec![int(1), int(1)]).unwrap()
}

/// `F[x]/(x^2 - x)` on the basis `1, x`.
pub fn fx_mod_x2_minus_x() -> FinAlgebra {
    let mut table = vec![vec![vecops::zeros(2); 2]; 2];
    table[0][0][0] = int(1);
    table[0][1][1] = int(1);
    table[1][0][1] = int(1);
    table[1][1][1] = int(1);
    FinAlgebra::new(table, vecops::unit(2, 0)).unwrap()
}

/// Full 2x2 matrix algebra on the basis `E11, E12, E21, E22`.
pub fn matrix_algebra_2x2() -> FinAlgebra {
    let dim = 4;
    let idx = |r: usize, c: usize| r * 2 + c;
    let mut table = vec![vec![vecops::zeros(dim); dim]; dim];
    for r in 0..2 {
        for c in 0..2 {
            for r2 in 0..2 {
                for c2 in 0..2 {
                    if c == r2 {
                        table[idx(r, c)][idx(r2, c2)][idx(r, c2)] = int(1);
                    }
                }
            }
        }
    }
    let mut unit = vecops::zeros(dim);
    unit[idx(0, 0)] = int(1);
    unit[idx(1, 1)] = int(1);
    FinAlgebra::new(table, unit).unwrap()
}

/// The smallest genuinely non-associative unital table: any unital
/// algebra of dimension 2 is `F[x]/(p)` and hence associative, so this
/// one lives in dimension 3. Basis `1, x, y` with `xx = y`, `yx = x`, and
/// all other non-unit products zero; then `(x,x,x) = (xx)x - x(xy) = x`.
pub fn nonassociative_3d() -> FinAlgebra {
    let mut table = vec![vec![vecops::zeros(3); 3]; 3];
    for j in 0..3 {
        table[0][j][j] = int(1);
        table[j][0][j] = int(1);
    }
    table[1][1][2] = int(1); // x x = y
    table[2][1][1] = int(1); // y x = x
    FinAlgebra::new(table, vecops::unit(3, 0)).unwrap()
}

/// The quaternions on the basis `1, i, j, k`.
pub fn quaternions() -> FinAlgebra {
    let dim = 4;
    let mut table = vec![vec![vecops::zeros(dim); dim]; dim];
    let mut put = |i: usize, j: usize, k: usize, sign: i64| {
        table[i][j][k] = int(sign);
    };
    for a in 0..4 {
        put(0, a, a, 1);
        if a != 0 {
            put(a, 0, a, 1);
            put(a, a, 0, -1);
        }
    }
    // i j = k and cyclic.
    put(1, 2, 3, 1);
    put(2, 1, 3, -1);
    put(2, 3, 1, 1);
    put(3, 2, 1, -1);
    put(3, 1, 2, 1);
    put(1, 3, 2, -1);
    FinAlgebra::new(table, vecops::unit(dim, 0)).unwrap()
}

/// Cayley–Dickson double of an algebra whose basis starts with the unit
/// and continues with elements negated by conjugation:
/// `(a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))`.
pub fn cayley_dickson_double(a: &FinAlgebra) -> FinAlgebra {
    let n = a.dim();
    let dim = 2 * n;
    let conj = |x: &[exact_linalg::Scalar]| -> Vec<exact_linalg::Scalar> {
        let mut out: Vec<exact_linalg::Scalar> = x.iter().map(|c| -c.clone()).collect();
        out[0] = x[0].clone();
        out
    };
    let mut table = vec![vec![vecops::zeros(dim); dim]; dim];
    for p in 0..dim {
        for q in 0..dim {
            let (a1, b1) = split(p, n);
            let (c1, d1) = split(q, n);
            let mut first = vecops::zeros(n);
            let mut second = vecops::zeros(n);
            // (a, b)(c, d) with exactly one basis letter per slot.
            if let (Some(x), Some(y)) = (a1, c1) {
                vecops::add_scaled(&mut first, a.product_basis(x, y), &int(1));
            }
            if let (Some(x), Some(y)) = (d1, b1) {
                let cx = conj(&vecops::unit(n, x));
                let prod = a.mul(&cx, &vecops::unit(n, y));
                vecops::add_scaled(&mut first, &prod, &int(-1));
            }
            if let (Some(x), Some(y)) = (d1, a1) {
                vecops::add_scaled(&mut second, a.product_basis(x, y), &int(1));
            }
            if let (Some(x), Some(y)) = (b1, c1) {
                let cy = conj(&vecops::unit(n, y));
                let prod = a.mul(&vecops::unit(n, x), &cy);
                vecops::add_scaled(&mut second, &prod, &int(1));
            }
            for l in 0..n {
                table[p][q][l] = first[l].clone();
                table[p][q][n + l] = second[l].clone();
            }
        }
    }
    FinAlgebra::new(table, vecops::unit(dim, 0)).unwrap()
}

fn split(index: usize, n: usize) -> (Option<usize>, Option<usize>) {
    if index < n {
        (Some(index), None)
    } else {
        (None, Some(index - n))
    }
}

/// The octonions, by doubling the quaternions. Alternative but not
/// associative.
pub fn octonions() -> FinAlgebra {
    cayley_dickson_double(&quaternions())
}
