//! Lie algebras by structure constants and the graded Lie envelope of a
//! Lie triple system.

use std::collections::BTreeMap;

use exact_linalg::{solve, vecops, Matrix, Scalar};
use num_traits::Zero;

use crate::system::TernarySystem;
use crate::LtsError;

type SparseVec = BTreeMap<usize, Scalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A finite-dimensional Lie algebra by structure constants. Brackets are
/// stored for index pairs `i < j` only, so antisymmetry holds by
/// construction; the Jacobi identity is checkable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraTable {
    dim: usize,
    bracket: BTreeMap<(usize, usize), SparseVec>,
    grading: Option<Vec<Parity>>,
    names: Option<Vec<String>>,
}

impl LieAlgebraTable {
    pub fn new(dim: usize) -> Self {
        LieAlgebraTable {
            dim,
            bracket: BTreeMap::new(),
            grading: None,
            names: None,
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim, "one name per basis vector");
        self.names = Some(names);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => format!("g{i}"),
        }
    }

    pub fn set_grading(&mut self, grading: Vec<Parity>) {
        assert_eq!(grading.len(), self.dim, "one parity per basis vector");
        self.grading = Some(grading);
    }

    pub fn grading(&self) -> Option<&[Parity]> {
        self.grading.as_deref()
    }

    /// Set `[g_i, g_j]` for `i < j`.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: &[Scalar]) -> Result<(), LtsError> {
        assert!(i < j, "store brackets for i < j only");
        if j >= self.dim {
            return Err(LtsError::IndexOutOfRange {
                index: j,
                dim: self.dim,
            });
        }
        if value.len() != self.dim {
            return Err(LtsError::VectorLength {
                got: value.len(),
                expected: self.dim,
            });
        }
        let sparse: SparseVec = value
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (l, c.clone()))
            .collect();
        if sparse.is_empty() {
            self.bracket.remove(&(i, j));
        } else {
            self.bracket.insert((i, j), sparse);
        }
        Ok(())
    }

    /// `[g_i, g_j]` as a dense vector, any `i, j`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vecops::zeros(self.dim);
        if i == j {
            return out;
        }
        let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
        if let Some(sparse) = self.bracket.get(&key) {
            for (&l, c) in sparse {
                out[l] = if sign > 0 { c.clone() } else { -c.clone() };
            }
        }
        out
    }

    /// Sparse view of `[g_i, g_j]` for rewriting loops.
    pub fn bracket_sparse(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        if i == j {
            return Vec::new();
        }
        let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
        match self.bracket.get(&key) {
            None => Vec::new(),
            Some(sparse) => sparse
                .iter()
                .map(|(&l, c)| (l, if sign > 0 { c.clone() } else { -c.clone() }))
                .collect(),
        }
    }

    pub fn bracket_eval(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "vector length mismatch");
        assert_eq!(y.len(), self.dim, "vector length mismatch");
        let mut out = vecops::zeros(self.dim);
        for (&(i, j), sparse) in &self.bracket {
            let factor = &x[i] * &y[j] - &x[j] * &y[i];
            if factor.is_zero() {
                continue;
            }
            for (&l, c) in sparse {
                out[l] += &factor * c;
            }
        }
        out
    }

    /// First basis triple violating the Jacobi identity, if any.
    pub fn check_jacobi(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut v = self.bracket_eval(&self.bracket_basis(i, j), &vecops::unit(n, k));
                    let t2 = self.bracket_eval(&self.bracket_basis(j, k), &vecops::unit(n, i));
                    let t3 = self.bracket_eval(&self.bracket_basis(k, i), &vecops::unit(n, j));
                    for l in 0..n {
                        v[l] = &v[l] + &t2[l] + &t3[l];
                    }
                    if !vecops::is_zero(&v) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// The graded Lie envelope of a Lie triple system: the span of the bracket
/// operators `D_{a,b} = [a,b,.]` (even part) glued to `V` itself (odd part).
///
/// The `scale` parameter builds the envelope of the rescaled bracket
/// `scale * [.,.,.]`; the enveloping-algebra construction uses `scale = 4`
/// so that its induced product recovers the unscaled bracket.
#[derive(Clone, Debug)]
pub struct LieEnvelope {
    pub table: LieAlgebraTable,
    pub d_dim: usize,
    pub v_dim: usize,
    /// The operator matrices chosen as the basis of the even part.
    pub d_operators: Vec<Matrix>,
    /// Which basis pair `(i, j)` produced each chosen operator.
    pub d_pairs: Vec<(usize, usize)>,
}

impl LieEnvelope {
    /// Envelope index of the image of the `i`-th basis vector of `V`.
    pub fn v_index(&self, i: usize) -> usize {
        self.d_dim + i
    }

    pub fn is_v_index(&self, g: usize) -> bool {
        g >= self.d_dim
    }

    /// Inverse of `v_index`, when defined.
    pub fn v_of_index(&self, g: usize) -> Option<usize> {
        g.checked_sub(self.d_dim)
    }
}

/// Build the Lie envelope of `t` for the bracket rescaled by `scale`.
///
/// The even basis is picked greedily from the operators `D_{e_i,e_j}`,
/// `i < j`, in lexicographic pair order, keeping each operator that is
/// independent of the ones already chosen. Requires `t` to satisfy the
/// Lie triple system axioms; fails with `EnvelopeNotClosed` otherwise.
pub fn lie_envelope(t: &TernarySystem, scale: &Scalar) -> Result<LieEnvelope, LtsError> {
    let n = t.dim();
    let mut d_operators: Vec<Matrix> = Vec::new();
    let mut d_pairs: Vec<(usize, usize)> = Vec::new();
    let mut echelon: Vec<Vec<Scalar>> = Vec::new();
    let mut pair_ops: BTreeMap<(usize, usize), Matrix> = BTreeMap::new();

    for i in 0..n {
        for j in i + 1..n {
            let mut op = Matrix::zero(n, n);
            for k in 0..n {
                let column = t.ternary_basis(i, j, k);
                for (l, c) in column.iter().enumerate() {
                    if !c.is_zero() {
                        op.set(l, k, c * scale);
                    }
                }
            }
            // Greedy independence test against the chosen operators.
            let mut residual = op.vectorize();
            for row in &echelon {
                let pivot = row.iter().position(|c| !c.is_zero()).unwrap();
                if !residual[pivot].is_zero() {
                    let factor = -residual[pivot].clone();
                    vecops::add_scaled(&mut residual, row, &factor);
                }
            }
            if !vecops::is_zero(&residual) {
                let pivot = residual.iter().position(|c| !c.is_zero()).unwrap();
                let inv = residual[pivot].recip();
                echelon.push(vecops::scale(&residual, &inv));
                d_operators.push(op.clone());
                d_pairs.push((i, j));
            }
            pair_ops.insert((i, j), op);
        }
    }

    let d_dim = d_operators.len();
    let dim = d_dim + n;
    // Columns of the chosen operators, for coordinate solves.
    let basis_matrix = Matrix::from_rows(transpose_vectors(
        d_operators.iter().map(Matrix::vectorize).collect(),
        n * n,
    ));
    let coords_of = |op: &Matrix| -> Result<Vec<Scalar>, LtsError> {
        if d_dim == 0 {
            return if op.is_zero() {
                Ok(Vec::new())
            } else {
                Err(LtsError::EnvelopeNotClosed)
            };
        }
        solve(&basis_matrix, &op.vectorize()).ok_or(LtsError::EnvelopeNotClosed)
    };

    let mut table = LieAlgebraTable::new(dim);
    let mut names = Vec::with_capacity(dim);
    for &(i, j) in &d_pairs {
        names.push(format!("D({},{})", t.name(i), t.name(j)));
    }
    for i in 0..n {
        names.push(t.name(i));
    }
    table = table.with_names(names);

    // Even-even: operator commutators, expressed in the chosen basis.
    for p in 0..d_dim {
        for q in p + 1..d_dim {
            let comm = d_operators[p].commutator(&d_operators[q]);
            let coords = coords_of(&comm)?;
            let mut value = vecops::zeros(dim);
            value[..d_dim].clone_from_slice(&coords);
            table.set_bracket(p, q, &value)?;
        }
    }
    // Even-odd: apply the operator.
    for p in 0..d_dim {
        for c in 0..n {
            let image = d_operators[p].mul_vec(&vecops::unit(n, c));
            let mut value = vecops::zeros(dim);
            for (l, x) in image.into_iter().enumerate() {
                value[d_dim + l] = x;
            }
            table.set_bracket(p, d_dim + c, &value)?;
        }
    }
    // Odd-odd: the bracket of two odd vectors is the corresponding operator.
    for i in 0..n {
        for j in i + 1..n {
            let coords = coords_of(&pair_ops[&(i, j)])?;
            let mut value = vecops::zeros(dim);
            value[..d_dim].clone_from_slice(&coords);
            table.set_bracket(d_dim + i, d_dim + j, &value)?;
        }
    }

    let mut grading = vec![Parity::Even; d_dim];
    grading.extend(std::iter::repeat(Parity::Odd).take(n));
    table.set_grading(grading);

    Ok(LieEnvelope {
        table,
        d_dim,
        v_dim: n,
        d_operators,
        d_pairs,
    })
}

fn transpose_vectors(columns: Vec<Vec<Scalar>>, len: usize) -> Vec<Vec<Scalar>> {
    let mut rows = vec![vecops::zeros(columns.len()); len];
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            rows[i][j] = v.clone();
        }
    }
    rows
}
