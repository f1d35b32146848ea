//! Small helpers for dense coordinate vectors.

use crate::scalar::Scalar;
use num_traits::Zero;

pub fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::from_integer(1.into());
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `dst += c * src`.
pub fn add_scaled(dst: &mut [Scalar], src: &[Scalar], c: &Scalar) {
    assert_eq!(dst.len(), src.len(), "vector length mismatch");
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d += c * s;
    }
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
