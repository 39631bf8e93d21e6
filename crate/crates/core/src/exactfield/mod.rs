//! Exact coefficient fields.
//!
//! [`Rational`] is the base field. [`AlgebraicNumber`] is Q(ζ60), the single
//! ambient field holding i, ζ3, ζ5 and √5. [`GaussianRational`] is Q(i) with a
//! cheaper representation, and [`QuadraticElement`] is a lightweight Q(√D) for
//! discriminants that have nothing to do with ζ60.

mod cyclo;
mod gaussian;
mod quadratic;
pub mod squarefree;

use core::fmt::Debug;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use cyclo::{AlgebraicNumber, Embedded};
pub use gaussian::GaussianRational;
pub use quadratic::QuadraticElement;
pub use squarefree::{squarefree_part, SquarefreePart};

/// Arbitrary precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not lie in a quadratic subfield")]
    NotInQuadraticSubfield,
    #[error("quadratic elements with different radicands: {0} and {1}")]
    RadicandMismatch(BigInt, BigInt),
    #[error("radicand must be nonzero")]
    ZeroRadicand,
}

/// A commutative field of characteristic zero with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;
    /// The rational value of `self` if it lies in Q.
    fn to_rational(&self) -> Option<Rational>;

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_rational(&Rational::from_integer(n.clone()))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    /// Multiplication by an integer. Implementations override this when they
    /// can avoid building a full field element.
    fn mul_int(&self, n: &BigInt) -> Self {
        self.clone() * Self::from_bigint(n)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn mul_int(&self, n: &BigInt) -> Self {
        self * Rational::from_integer(n.clone())
    }
}

/// Builds `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> alloc::string::String {
    use alloc::string::ToString;
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact square root of a rational, if it exists.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = squarefree::exact_isqrt(q.numer())?;
    let d = squarefree::exact_isqrt(q.denom())?;
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-3", "7/2", "-122023936/161051"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn rational_pow_and_sqrt() {
        assert_eq!(rat(-2, 3).pow(3), rat(-8, 27));
        assert_eq!(rational_sqrt(&rat(49, 4)), Some(rat(7, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
    }
}
