//! Coefficient field.
//!
//! Every structure in the crate is generic over a [`Scalar`]. Identity checks
//! ("the defect is zero") are only meaningful for exact types, so the
//! verification layer is instantiated at [`Q`], arbitrary-precision
//! rationals. Floating point works for exploration, nothing more.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Q = BigRational;

/// A field of characteristic zero we can compute in.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar type embeds the integers")
    }

    /// `num / den`, panicking on a zero denominator.
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_int(num) / Self::from_int(den)
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Display + Signed + FromPrimitive + Send + Sync + 'static
{
}

/// Builds an exact rational from big integers, rejecting a zero denominator.
pub fn rational(num: BigInt, den: BigInt) -> Option<Q> {
    if den == BigInt::from(0) {
        None
    } else {
        Some(Q::new(num, den))
    }
}

/// Shorthand for small exact constants in tables and tests.
pub fn q(num: i64, den: i64) -> Q {
    Q::from_ratio(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn rationals_are_reduced() {
        let a = q(6, -4);
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        assert!(q(0, 5).is_zero());
        assert_eq!(q(0, 5).denom(), &BigInt::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(rational(BigInt::from(1), BigInt::from(0)).is_none());
    }

    #[test]
    fn field_axioms_on_samples() {
        let xs = [q(1, 2), q(-3, 7), q(5, 1), q(0, 1), q(-11, 12)];
        for a in &xs {
            for b in &xs {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in &xs {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
                let p = a * b;
                assert!(p.denom() > &BigInt::zero());
            }
        }
    }

    #[test]
    fn floats_are_scalars_too() {
        fn half<S: Scalar>() -> S {
            S::from_ratio(1, 2)
        }
        assert_eq!(half::<f64>(), 0.5);
        assert_eq!(half::<Q>(), q(1, 2));
    }
}
