//! Unital algebras by dense multiplication tables.

use exact_linalg::{ratio, vecops, Matrix, Scalar};
use lts_core::SubspaceBasis;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::NucleusError;

/// A finite-dimensional unital algebra: `table[i][j]` holds the
/// coordinates of `e_i e_j`, and `unit` the coordinates of `1`. Tables are
/// dense; this is desk-scale machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    dim: usize,
    table: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl FinAlgebra {
    pub fn new(
        table: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> Result<FinAlgebra, NucleusError> {
        let dim = table.len();
        assert!(
            table.iter().all(|row| row.len() == dim)
                && table
                    .iter()
                    .all(|row| row.iter().all(|entry| entry.len() == dim)),
            "table must be dim x dim x dim"
        );
        assert_eq!(unit.len(), dim, "unit coordinate length mismatch");
        let algebra = FinAlgebra { dim, table, unit };
        for i in 0..dim {
            let e = vecops::unit(dim, i);
            if algebra.mul(&algebra.unit, &e) != e || algebra.mul(&e, &algebra.unit) != e {
                return Err(NucleusError::UnitLaw { index: i });
            }
        }
        Ok(algebra)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "vector length mismatch");
        assert_eq!(y.len(), self.dim, "vector length mismatch");
        let mut out = vecops::zeros(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let factor = &x[i] * &y[j];
                vecops::add_scaled(&mut out, &self.table[i][j], &factor);
            }
        }
        out
    }

    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        vecops::sub(&self.mul(&self.mul(x, y), z), &self.mul(x, &self.mul(y, z)))
    }

    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(a, &vecops::unit(self.dim, j));
            for (l, c) in col.into_iter().enumerate() {
                m.set(l, j, c);
            }
        }
        m
    }

    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(&vecops::unit(self.dim, j), a);
            for (l, c) in col.into_iter().enumerate() {
                m.set(l, j, c);
            }
        }
        m
    }

    /// Span closure under the product, optionally seeded with the unit.
    pub fn subalgebra_closure(&self, generators: &[Vec<Scalar>], unital: bool) -> SubspaceBasis {
        let mut spanning: Vec<Vec<Scalar>> = generators.to_vec();
        if unital {
            spanning.push(self.unit.clone());
        }
        let mut current = SubspaceBasis::from_spanning(self.dim, spanning);
        loop {
            let mut extra = Vec::new();
            for x in current.vectors() {
                for y in current.vectors() {
                    let p = self.mul(x, y);
                    if !current.contains(&p) {
                        extra.push(p);
                    }
                }
            }
            if extra.is_empty() {
                return current;
            }
            let mut spanning = current.vectors().to_vec();
            spanning.extend(extra);
            current = SubspaceBasis::from_spanning(self.dim, spanning);
        }
    }

    /// Two-sided ideal generated by a set, by alternating left and right
    /// multiplication closure to a fixed point.
    pub fn ideal_generated_by(&self, generators: &[Vec<Scalar>]) -> SubspaceBasis {
        let mut current = SubspaceBasis::from_spanning(self.dim, generators.to_vec());
        loop {
            let mut extra = Vec::new();
            for x in current.vectors() {
                for j in 0..self.dim {
                    let e = vecops::unit(self.dim, j);
                    for p in [self.mul(&e, x), self.mul(x, &e)] {
                        if !current.contains(&p) {
                            extra.push(p);
                        }
                    }
                }
            }
            if extra.is_empty() {
                return current;
            }
            let mut spanning = current.vectors().to_vec();
            spanning.extend(extra);
            current = SubspaceBasis::from_spanning(self.dim, spanning);
        }
    }

    /// Nilpotency of the (non-unital) span: iterate the spans of all
    /// products of generation up to `dim + 1`; at finite dimension the
    /// chain either hits zero or stabilizes.
    pub fn is_nilpotent_span(&self, space: &SubspaceBasis) -> bool {
        // powers[k] = span of all products of k+1 elements, any bracketing.
        let mut powers: Vec<SubspaceBasis> = vec![space.clone()];
        for _ in 1..=self.dim + 1 {
            let k = powers.len();
            let mut spanning = Vec::new();
            for i in 0..k {
                let j = k - 1 - i;
                for x in powers[i].vectors() {
                    for y in powers[j].vectors() {
                        let p = self.mul(x, y);
                        if !vecops::is_zero(&p) {
                            spanning.push(p);
                        }
                    }
                }
            }
            let next = SubspaceBasis::from_spanning(self.dim, spanning);
            if next.is_zero_space() {
                return true;
            }
            if powers.iter().any(|p| p == &next) {
                // Stable nonzero power; not nilpotent.
                return false;
            }
            powers.push(next);
        }
        powers.last().map_or(true, SubspaceBasis::is_zero_space)
    }
}

/// JSON form: `{"dim": n, "unit": u, "table": [[i,j, k, num, den], ...]}`.
/// `unit` is either a basis index or a coordinate vector whose entries are
/// integers or `[num, den]` pairs. Omitted table entries are zero.
#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub unit: serde_json::Value,
    #[serde(default)]
    pub table: Vec<(usize, usize, usize, i64, i64)>,
}

impl FinAlgebra {
    pub fn from_json_value(raw: AlgebraJson) -> Result<FinAlgebra, NucleusError> {
        let dim = raw.dim;
        let mut table = vec![vec![vecops::zeros(dim); dim]; dim];
        for &(i, j, k, num, den) in &raw.table {
            if den == 0 {
                return Err(NucleusError::InvalidJson("zero denominator".to_string()));
            }
            if i >= dim || j >= dim || k >= dim {
                return Err(NucleusError::InvalidJson(format!(
                    "index out of range in entry [{i},{j},{k}]"
                )));
            }
            table[i][j][k] += ratio(num, den);
        }
        let unit = parse_unit(&raw.unit, dim)?;
        FinAlgebra::new(table, unit)
    }

    pub fn from_json_str(s: &str) -> Result<FinAlgebra, NucleusError> {
        let raw: AlgebraJson =
            serde_json::from_str(s).map_err(|e| NucleusError::InvalidJson(e.to_string()))?;
        FinAlgebra::from_json_value(raw)
    }
}

fn parse_unit(value: &serde_json::Value, dim: usize) -> Result<Vec<Scalar>, NucleusError> {
    match value {
        serde_json::Value::Number(n) => {
            let idx = n
                .as_u64()
                .ok_or_else(|| NucleusError::InvalidJson("unit index must be unsigned".into()))?
                as usize;
            if idx >= dim {
                return Err(NucleusError::InvalidJson(format!(
                    "unit index {idx} out of range"
                )));
            }
            Ok(vecops::unit(dim, idx))
        }
        serde_json::Value::Array(entries) => {
            if entries.len() != dim {
                return Err(NucleusError::InvalidJson(format!(
                    "unit vector has {} entries for dimension {dim}",
                    entries.len()
                )));
            }
            entries
                .iter()
                .map(|e| match e {
                    serde_json::Value::Number(n) => n
                        .as_i64()
                        .map(exact_linalg::int)
                        .ok_or_else(|| NucleusError::InvalidJson("bad unit entry".into())),
                    serde_json::Value::Array(pair) if pair.len() == 2 => {
                        let num = pair[0].as_i64();
                        let den = pair[1].as_i64();
                        match (num, den) {
                            (Some(n), Some(d)) if d != 0 => Ok(ratio(n, d)),
                            _ => Err(NucleusError::InvalidJson("bad unit fraction".into())),
                        }
                    }
                    _ => Err(NucleusError::InvalidJson("bad unit entry".into())),
                })
                .collect()
        }
        _ => Err(NucleusError::InvalidJson(
            "unit must be an index or a coordinate vector".into(),
        )),
    }
}
