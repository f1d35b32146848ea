//! The closed determinant identity behind the rotation-algebra
//! centralizer computation: the three linear conditions on the top
//! coefficients assemble into a 3x3 matrix whose determinant is
//! `2 (n+2)(p+2)(q+2)(n+p+q+1)^2`.

use exact_linalg::{int, Matrix, Scalar};

#[derive(Clone, Debug)]
pub struct So3Determinant {
    pub matrix: Matrix,
    pub det: Scalar,
    pub closed_form: Scalar,
}

impl So3Determinant {
    pub fn agrees(&self) -> bool {
        self.det == self.closed_form
    }
}

pub fn so3_condition_det(n: u64, p: u64, q: u64) -> So3Determinant {
    let (n, p, q) = (n as i64, p as i64, q as i64);
    let rows = [
        [-(p + q) * (n + 2), (p + 1) * (p + 2), (q + 1) * (q + 2)],
        [(n + 1) * (n + 2), -(n + q) * (p + 2), (q + 1) * (q + 2)],
        [(n + 1) * (n + 2), (p + 1) * (p + 2), -(n + p) * (q + 2)],
    ];
    let matrix = Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect(),
    );
    let det = matrix.determinant();
    let closed_form =
        int(2) * int(n + 2) * int(p + 2) * int(q + 2) * int(n + p + q + 1) * int(n + p + q + 1);
    So3Determinant {
        matrix,
        det,
        closed_form,
    }
}
