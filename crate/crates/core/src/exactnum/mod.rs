//! Exact arithmetic: arbitrary-precision rationals and the cyclotomic fields Q(ζ_N).
//!
//! Rationals are `num_rational::BigRational`, which keeps every value in lowest
//! terms with a positive denominator. Cyclotomic numbers are stored in the power
//! basis `1, ζ, …, ζ^{φ(N)-1}` modulo the N-th cyclotomic polynomial, so two
//! elements are equal exactly when their coefficient vectors are.

mod cyclotomic;

pub use cyclotomic::{cyclotomic_poly, geom_sum, root_of_unity, Cyclotomic, CyclotomicError};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// Parses `"a"` or `"a/b"` with arbitrary-precision integers.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// True when `x` is a nonnegative integer.
pub fn is_natural(x: &Rational) -> bool {
    x.denom().is_one() && !x.numer().is_negative()
}
