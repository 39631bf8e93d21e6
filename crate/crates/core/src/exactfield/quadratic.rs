//! Elements a + b√D of a quadratic field.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::squarefree::{exact_isqrt, squarefree_part};
use super::{FieldError, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticElement {
    a: Rational,
    b: Rational,
    d: BigInt,
    certified: bool,
}

impl QuadraticElement {
    /// Builds a + b√D, moving square factors of D into b. Radicands that are
    /// perfect squares collapse into the rational part with D = 1.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Result<Self, FieldError> {
        if d.is_zero() {
            return Err(FieldError::ZeroRadicand);
        }
        let sf = squarefree_part(&d);
        let s2 = &d / &sf.value;
        let s = exact_isqrt(&s2).expect("d / squarefree(d) is a square");
        let b = b * Rational::from_integer(s);
        if sf.value.is_one() {
            return Ok(QuadraticElement {
                a: a + b,
                b: Rational::zero(),
                d: BigInt::one(),
                certified: sf.certified,
            });
        }
        Ok(QuadraticElement {
            a,
            b,
            d: sf.value,
            certified: sf.certified,
        })
    }

    /// Trusts the caller that `d` is squarefree.
    pub fn from_squarefree(a: Rational, b: Rational, d: BigInt) -> Self {
        QuadraticElement {
            a,
            b,
            d,
            certified: true,
        }
    }

    pub fn from_rational(a: Rational, d: BigInt) -> Self {
        Self::from_squarefree(a, Rational::zero(), d)
    }

    /// √D itself.
    pub fn sqrt_d(d: BigInt) -> Self {
        Self::from_squarefree(Rational::zero(), Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }
    /// Whether D is known to be squarefree (factoring completed).
    pub fn certified(&self) -> bool {
        self.certified
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_field(&self, o: &Self) -> Result<(), FieldError> {
        if self.d == o.d || self.b.is_zero() || o.b.is_zero() {
            Ok(())
        } else {
            Err(FieldError::RadicandMismatch(self.d.clone(), o.d.clone()))
        }
    }

    fn radicand(&self, o: &Self) -> BigInt {
        if self.b.is_zero() {
            o.d.clone()
        } else {
            self.d.clone()
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, FieldError> {
        self.same_field(o)?;
        Ok(QuadraticElement {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            d: self.radicand(o),
            certified: self.certified && o.certified,
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, FieldError> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        QuadraticElement {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
            certified: self.certified,
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, FieldError> {
        self.same_field(o)?;
        let d = self.radicand(o);
        let dq = Rational::from_integer(d.clone());
        Ok(QuadraticElement {
            a: &self.a * &o.a + &self.b * &o.b * dq,
            b: &self.a * &o.b + &self.b * &o.a,
            d,
            certified: self.certified && o.certified,
        })
    }

    pub fn conj(&self) -> Self {
        QuadraticElement {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
            certified: self.certified,
        }
    }

    /// a² − D b².
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let c = self.conj();
        Ok(QuadraticElement {
            a: c.a / &n,
            b: c.b / n,
            d: c.d,
            certified: c.certified,
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self, FieldError> {
        self.mul(&o.inv()?)
    }

    /// Sign of the real number a + b√D with √D > 0. `None` when D < 0 and
    /// b ≠ 0, since the element is then not real.
    pub fn real_sign(&self) -> Option<Ordering> {
        if self.b.is_zero() {
            return Some(self.a.cmp(&Rational::zero()));
        }
        if self.d.is_negative() {
            return None;
        }
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sa == Ordering::Equal || sa == sb {
            return Some(sb);
        }
        // Opposite signs: compare a² with b²D.
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * Rational::from_integer(self.d.clone());
        Some(match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        })
    }
}

impl fmt::Debug for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use proptest::prelude::*;

    fn q(a: Rational, b: Rational, d: i64) -> QuadraticElement {
        QuadraticElement::new(a, b, BigInt::from(d)).unwrap()
    }

    #[test]
    fn radicand_is_normalized() {
        let x = q(rat(1, 1), rat(1, 1), 12);
        assert_eq!(x.d(), &BigInt::from(3));
        assert_eq!(x.b(), &rat(2, 1));
        let y = q(rat(1, 1), rat(3, 1), 4);
        assert!(y.is_rational());
        assert_eq!(y.a(), &rat(7, 1));
    }

    #[test]
    fn arithmetic() {
        let s = QuadraticElement::sqrt_d(BigInt::from(5));
        assert_eq!(s.mul(&s).unwrap(), QuadraticElement::from_rational(rat(5, 1), 5.into()));
        let w = q(rat(-1, 2), rat(1, 2), 5);
        // ω² + ω − 1 = 0
        let lhs = w
            .mul(&w)
            .unwrap()
            .add(&w)
            .unwrap()
            .sub(&QuadraticElement::from_rational(rat(1, 1), 5.into()))
            .unwrap();
        assert!(lhs.is_zero());
        let other = QuadraticElement::sqrt_d(BigInt::from(3));
        assert!(s.add(&other).is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(q(rat(-2, 1), rat(1, 1), 5).real_sign(), Some(Ordering::Greater));
        assert_eq!(q(rat(-3, 1), rat(1, 1), 5).real_sign(), Some(Ordering::Less));
        assert_eq!(q(rat(0, 1), rat(-1, 1), 3).real_sign(), Some(Ordering::Less));
        assert_eq!(q(rat(0, 1), rat(1, 1), -3).real_sign(), None);
    }

    proptest! {
        #[test]
        fn inverse(a in -40i64..40, b in 1i64..40, d in prop::sample::select(vec![2i64, 3, 5, -1, -7, 6, 10])) {
            let x = q(rat(a, 3), rat(b, 7), d);
            let one = x.mul(&x.inv().unwrap()).unwrap();
            prop_assert_eq!(one.a(), &rat(1, 1));
            prop_assert!(one.b().is_zero());
        }
    }
}
