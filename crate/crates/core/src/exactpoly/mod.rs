//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod polynomial;
mod vartable;

use num_bigint::BigInt;
use num_traits::One;

pub use monomial::Monomial;
pub use polynomial::{Polynomial, Substitution};
pub use vartable::{VarDesc, VarTable};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num/den`, or just `num` when the denominator is 1.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
