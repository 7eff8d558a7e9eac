//! Exact fractions. All curvatures, expectations and polynomial
//! coefficients that are not integers live in this type.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always reduced, denominator positive.
/// `Display` renders `p/q`, or just `p` when the denominator is one.
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` reduced. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Approximate value for diagnostics only; never used in any identity check.
pub fn to_f64(r: &Rational) -> f64 {
    let n = r.numer();
    let d = r.denom();
    // good enough for display: both fit in f64 at desk scale after reduction
    bigint_f64(n) / bigint_f64(d)
}

fn bigint_f64(n: &BigInt) -> f64 {
    n.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_lowest_terms() {
        assert_eq!(ratio(2, 4).to_string(), "1/2");
        assert_eq!(ratio(4, 4).to_string(), "1");
        assert_eq!(ratio(-1, 3).to_string(), "-1/3");
        assert_eq!(ratio(0, 5).to_string(), "0");
    }

    #[test]
    fn arithmetic_is_exact() {
        let k = ratio(1, 4) * ratio(-1, 1);
        assert_eq!(k, ratio(-1, 4));
        assert_eq!(ratio(1, 2) + ratio(1, 3), ratio(5, 6));
    }
}
