//! Sparse rational matrices and deterministic elimination kernels.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::vecops;

/// Sparse matrix over the rationals. Dimensions are fixed at construction
/// and zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Scalar::one());
        }
        m
    }

    /// Build from dense rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Matrix::zero(nrows, ncols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    m.entries.insert((i, j), v);
                }
            }
        }
        m
    }

    /// Build from integer rows (test convenience).
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| crate::scalar::int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    fn row_range(&self, i: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(&(_, j), v)| (j, v))
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let mut out = self.clone();
        for (&(i, j), v) in &rhs.entries {
            let sum = out.entry(i, j) + v;
            out.set(i, j, sum);
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let mut out = self.clone();
        for (&(i, j), v) in &rhs.entries {
            let diff = out.entry(i, j) - v;
            out.set(i, j, diff);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = Matrix::zero(self.rows, self.cols);
        for (&(i, j), v) in &self.entries {
            out.entries.insert((i, j), -v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = Matrix::zero(self.rows, self.cols);
        if c.is_zero() {
            return out;
        }
        for (&(i, j), v) in &self.entries {
            out.entries.insert((i, j), v * c);
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for (&(i, k), a) in &self.entries {
            for (j, b) in rhs.row_range(k) {
                let sum = out.entry(i, j) + a * b;
                out.set(i, j, sum);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let mut out = vecops::zeros(self.rows);
        for (&(i, j), a) in &self.entries {
            if !v[j].is_zero() {
                out[i] += a * &v[j];
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for (&(i, j), v) in &self.entries {
            out.entries.insert((j, i), v.clone());
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += self.entry(i, i);
        }
        t
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Matrix commutator `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vecops::zeros(self.cols); self.rows];
        for (&(i, j), v) in &self.entries {
            rows[i][j] = v.clone();
        }
        rows
    }

    /// Row-major flattening, used to treat operators as vectors.
    pub fn vectorize(&self) -> Vec<Scalar> {
        let mut out = vecops::zeros(self.rows * self.cols);
        for (&(i, j), v) in &self.entries {
            out[i * self.cols + j] = v.clone();
        }
        out
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut rows = self.row_vectors();
        let mut det = Scalar::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !rows[r][col].is_zero()) {
                Some(p) => p,
                None => return Scalar::zero(),
            };
            if pivot != col {
                rows.swap(pivot, col);
                det = -det;
            }
            det *= rows[col][col].clone();
            let inv = rows[col][col].recip();
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = &rows[r][col] * &inv;
                for c in col..n {
                    let delta = &factor * &rows[col][c];
                    rows[r][c] -= delta;
                }
            }
        }
        det
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_vectors() {
            writeln!(
                f,
                "[{}]",
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

/// Gauss–Jordan reduction to reduced row echelon form, in place.
///
/// The pivot of each column is the first row (in scan order) with a nonzero
/// entry, so the result is a deterministic function of the input. Returns
/// the pivot columns.
pub fn rref(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        if next_row >= nrows {
            break;
        }
        let pivot = match (next_row..nrows).find(|&r| !rows[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        rows.swap(pivot, next_row);
        let inv = rows[next_row][col].recip();
        for c in col..ncols {
            rows[next_row][c] *= inv.clone();
        }
        for r in 0..nrows {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let delta = &factor * &rows[next_row][c];
                rows[r][c] -= delta;
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut rows = m.row_vectors();
    rref(&mut rows).len()
}

/// Solve `M x = b` exactly. Returns the first solution under the fixed
/// pivot order (free variables set to zero), or `None` if inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length mismatch");
    let sol = solve_many(
        m,
        &Matrix::from_rows(b.iter().map(|v| vec![v.clone()]).collect()),
    )?;
    Some((0..m.cols()).map(|i| sol.entry(i, 0)).collect())
}

/// Solve `M X = B` column by column with one shared elimination.
pub fn solve_many(m: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(m.rows(), b.rows(), "right-hand side shape mismatch");
    let ncols = m.cols();
    let extra = b.cols();
    let mut rows = m.row_vectors();
    let brows = b.row_vectors();
    for (row, brow) in rows.iter_mut().zip(brows) {
        row.extend(brow);
    }
    let pivots = rref(&mut rows);
    // Any pivot landing in the augmented block means inconsistency.
    if pivots.iter().any(|&c| c >= ncols) {
        return None;
    }
    let mut out = Matrix::zero(ncols, extra);
    for (r, &c) in pivots.iter().enumerate() {
        for k in 0..extra {
            out.set(c, k, rows[r][ncols + k].clone());
        }
    }
    Some(out)
}

/// Basis of the kernel `{x : Mx = 0}` in reduced echelon form.
///
/// The empty list means the kernel is trivial.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Scalar>> {
    let ncols = m.cols();
    let mut rows = m.row_vectors();
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vecops::zeros(ncols);
        v[fc] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[r][fc].clone();
        }
        basis.push(v);
    }
    // Canonical form: echelon-normalize the stacked basis vectors.
    rref(&mut basis);
    basis.retain(|v| !vecops::is_zero(v));
    basis
}
