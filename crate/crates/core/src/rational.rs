//! Exact coefficients.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

/// Exact rational number with arbitrary-precision numerator and denominator,
/// always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `1 / n!`
pub fn inverse_factorial(n: usize) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(factorial(n)))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_biguint(n: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
