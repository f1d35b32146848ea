//! Canonically normalized subspaces of a fixed coordinate space.

use exact_linalg::{rref, vecops, Scalar};
use num_traits::Zero;

/// A subspace given by a basis in reduced row echelon form. The echelon
/// normalization makes equality of subspaces equality of values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<Scalar>>,
}

impl SubspaceBasis {
    pub fn empty(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: (0..ambient).map(|i| vecops::unit(ambient, i)).collect(),
        }
    }

    pub fn from_spanning(ambient: usize, spanning: Vec<Vec<Scalar>>) -> Self {
        let mut rows: Vec<Vec<Scalar>> = spanning
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "spanning vector length mismatch"))
            .collect();
        rref(&mut rows);
        rows.retain(|v| !vecops::is_zero(v));
        SubspaceBasis {
            ambient,
            vectors: rows,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero_space(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    /// Residual of `v` after eliminating against the basis.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        for row in &self.vectors {
            let pivot = row.iter().position(|c| !c.is_zero()).unwrap();
            if v[pivot].is_zero() {
                continue;
            }
            let factor = -v[pivot].clone();
            vecops::add_scaled(&mut v, row, &factor);
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vecops::is_zero(&self.reduce(v.to_vec()))
    }

    pub fn contains_space(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut v = v.to_vec();
        let mut coords = Vec::with_capacity(self.vectors.len());
        for row in &self.vectors {
            let pivot = row.iter().position(|c| !c.is_zero()).unwrap();
            let c = v[pivot].clone();
            if !c.is_zero() {
                vecops::add_scaled(&mut v, row, &-c.clone());
            }
            coords.push(c);
        }
        vecops::is_zero(&v).then_some(coords)
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut spanning = self.vectors.clone();
        spanning.extend(other.vectors.iter().cloned());
        SubspaceBasis::from_spanning(self.ambient, spanning)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::int;

    #[test]
    fn normalization_is_canonical() {
        let a = SubspaceBasis::from_spanning(3, vec![vec![int(2), int(0), int(2)]]);
        let b = SubspaceBasis::from_spanning(3, vec![vec![int(-1), int(0), int(-1)]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn membership_and_coordinates() {
        let s = SubspaceBasis::from_spanning(
            3,
            vec![vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]],
        );
        assert!(s.contains(&[int(1), int(2), int(1)]));
        assert!(!s.contains(&[int(0), int(0), int(1)]));
        let coords = s.coordinates(&[int(1), int(2), int(1)]).unwrap();
        let mut rebuilt = exact_linalg::vecops::zeros(3);
        for (c, v) in coords.iter().zip(s.vectors()) {
            exact_linalg::vecops::add_scaled(&mut rebuilt, v, c);
        }
        assert_eq!(rebuilt, vec![int(1), int(2), int(1)]);
    }
}
