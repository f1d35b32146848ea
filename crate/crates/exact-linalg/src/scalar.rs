//! The base field: arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds.
pub type Scalar = BigRational;

/// Integer as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Fraction `num/den`, reduced on construction. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^n` as a scalar; `n` may be negative.
pub fn two_pow(n: i64) -> Scalar {
    let p = BigInt::from(1) << n.unsigned_abs() as usize;
    if n >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::from(1), p)
    }
}
