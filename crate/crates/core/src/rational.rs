//! Arbitrary-precision rational scalars.
//!
//! A thin layer over `num_rational::BigRational`; the alias keeps signatures
//! short and the constructors keep tests readable.

pub use num_rational::BigRational as Rational;

use num_bigint::BigInt;

/// Builds `num/den` exactly. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn constructors_reduce() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert_eq!(rat_int(5), rat(5, 1));
        assert!(rat(0, 7).is_zero());
    }

    #[test]
    fn display_round_trips_through_parse() {
        let v = rat(-3, 4);
        let s = v.to_string();
        assert_eq!(s, "-3/4");
        assert_eq!(s.parse::<Rational>().unwrap(), v);
    }
}
