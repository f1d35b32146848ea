//! Ternary (and optional binary) algebras by structure constants.

use std::collections::BTreeMap;

use exact_linalg::{vecops, Scalar};
use num_traits::Zero;

use crate::axioms::{self, AxiomMode};
use crate::LtsError;

type SparseVec = BTreeMap<usize, Scalar>;

/// A finite-dimensional algebra with a trilinear bracket `[a,b,c]` and an
/// optional bilinear bracket `[a,b]`, both given by structure constants on
/// a fixed basis. A Lie triple system is the special case of an identically
/// zero binary part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernarySystem {
    dim: usize,
    ternary: BTreeMap<(usize, usize, usize), SparseVec>,
    binary: BTreeMap<(usize, usize), SparseVec>,
    names: Option<Vec<String>>,
}

impl TernarySystem {
    pub fn new(dim: usize) -> Self {
        TernarySystem {
            dim,
            ternary: BTreeMap::new(),
            binary: BTreeMap::new(),
            names: None,
        }
    }

    pub fn with_names(mut self, names: Vec<&str>) -> Self {
        assert_eq!(names.len(), self.dim, "one name per basis vector");
        self.names = Some(names.into_iter().map(str::to_owned).collect());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    fn check_index(&self, index: usize) -> Result<(), LtsError> {
        if index >= self.dim {
            Err(LtsError::IndexOutOfRange {
                index,
                dim: self.dim,
            })
        } else {
            Ok(())
        }
    }

    /// Set the structure constants of `[e_i, e_j, e_k]` from a dense vector.
    pub fn set_ternary(
        &mut self,
        i: usize,
        j: usize,
        k: usize,
        value: &[Scalar],
    ) -> Result<(), LtsError> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_index(k)?;
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
            self.ternary.remove(&(i, j, k));
        } else {
            self.ternary.insert((i, j, k), sparse);
        }
        Ok(())
    }

    /// Set `[e_i, e_j, e_k] = value` and `[e_j, e_i, e_k] = -value` in one go.
    pub fn set_ternary_skew(
        &mut self,
        i: usize,
        j: usize,
        k: usize,
        value: &[Scalar],
    ) -> Result<(), LtsError> {
        self.set_ternary(i, j, k, value)?;
        let neg: Vec<Scalar> = value.iter().map(|c| -c.clone()).collect();
        self.set_ternary(j, i, k, &neg)
    }

    pub fn set_binary(&mut self, i: usize, j: usize, value: &[Scalar]) -> Result<(), LtsError> {
        self.check_index(i)?;
        self.check_index(j)?;
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
            self.binary.remove(&(i, j));
        } else {
            self.binary.insert((i, j), sparse);
        }
        Ok(())
    }

    pub fn set_binary_skew(
        &mut self,
        i: usize,
        j: usize,
        value: &[Scalar],
    ) -> Result<(), LtsError> {
        self.set_binary(i, j, value)?;
        let neg: Vec<Scalar> = value.iter().map(|c| -c.clone()).collect();
        self.set_binary(j, i, &neg)
    }

    /// `[e_i, e_j, e_k]` as a dense coordinate vector.
    pub fn ternary_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut out = vecops::zeros(self.dim);
        if let Some(sparse) = self.ternary.get(&(i, j, k)) {
            for (&l, c) in sparse {
                out[l] = c.clone();
            }
        }
        out
    }

    /// `[e_i, e_j]` as a dense coordinate vector.
    pub fn binary_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vecops::zeros(self.dim);
        if let Some(sparse) = self.binary.get(&(i, j)) {
            for (&l, c) in sparse {
                out[l] = c.clone();
            }
        }
        out
    }

    pub fn binary_is_zero(&self) -> bool {
        self.binary.is_empty()
    }

    pub fn ternary_is_zero(&self) -> bool {
        self.ternary.is_empty()
    }

    pub fn ternary_entries(
        &self,
    ) -> impl Iterator<Item = ((usize, usize, usize), &SparseVec)> + '_ {
        self.ternary.iter().map(|(&k, v)| (k, v))
    }

    /// Trilinear evaluation of the ternary bracket on coordinate vectors.
    pub fn bracket_eval(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), self.dim, "vector length mismatch");
        assert_eq!(b.len(), self.dim, "vector length mismatch");
        assert_eq!(c.len(), self.dim, "vector length mismatch");
        let mut out = vecops::zeros(self.dim);
        for (&(i, j, k), sparse) in &self.ternary {
            if a[i].is_zero() || b[j].is_zero() || c[k].is_zero() {
                continue;
            }
            let factor = &a[i] * &b[j] * &c[k];
            for (&l, coef) in sparse {
                out[l] += &factor * coef;
            }
        }
        out
    }

    /// Bilinear evaluation of the binary bracket on coordinate vectors.
    pub fn binary_eval(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), self.dim, "vector length mismatch");
        assert_eq!(b.len(), self.dim, "vector length mismatch");
        let mut out = vecops::zeros(self.dim);
        for (&(i, j), sparse) in &self.binary {
            if a[i].is_zero() || b[j].is_zero() {
                continue;
            }
            let factor = &a[i] * &b[j];
            for (&l, coef) in sparse {
                out[l] += &factor * coef;
            }
        }
        out
    }

    /// Jacobian `J(a,b,c) = [[a,b],c] + [[b,c],a] + [[c,a],b]` of the binary
    /// bracket.
    pub fn jacobian(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.binary_eval(&self.binary_eval(a, b), c);
        let t2 = self.binary_eval(&self.binary_eval(b, c), a);
        let t3 = self.binary_eval(&self.binary_eval(c, a), b);
        for l in 0..self.dim {
            out[l] = &out[l] + &t2[l] + &t3[l];
        }
        out
    }

    /// Turn a Malcev algebra (binary bracket only) into the Bol algebra with
    /// the induced ternary bracket `[a,b,c] = [[a,b],c] - J(a,b,c)/3`.
    pub fn malcev_to_bol(&self) -> Result<TernarySystem, LtsError> {
        if !self.ternary_is_zero() {
            return Err(LtsError::MalcevNeedsBinaryOnly);
        }
        let report = axioms::check_axioms(self, AxiomMode::Malcev)?;
        if let Some(check) = report.checks.iter().find(|c| c.witness.is_some()) {
            return Err(LtsError::NotMalcev {
                axiom: check.axiom.to_string(),
            });
        }
        let third = exact_linalg::ratio(1, 3);
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let ei = vecops::unit(self.dim, i);
                    let ej = vecops::unit(self.dim, j);
                    let ek = vecops::unit(self.dim, k);
                    let double = self.binary_eval(&self.binary_eval(&ei, &ej), &ek);
                    let jac = self.jacobian(&ei, &ej, &ek);
                    let mut value = vecops::zeros(self.dim);
                    for l in 0..self.dim {
                        value[l] = &double[l] - &(&third * &jac[l]);
                    }
                    out.set_ternary(i, j, k, &value)?;
                }
            }
        }
        Ok(out)
    }
}
