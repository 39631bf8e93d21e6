//! Gaussian rationals Q(i), the working field of the x² model.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraicNumber, Field, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(re.into()),
            im: Rational::from_integer(im.into()),
        }
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// The same element inside Q(ζ60), with i = ζ^15.
    pub fn to_algebraic(&self) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(&self.re)
            + AlgebraicNumber::from_rational(&self.im) * AlgebraicNumber::i()
    }

    /// Inverse of [`Self::to_algebraic`]; `None` if the element is not in Q(i).
    pub fn from_algebraic(x: &AlgebraicNumber) -> Option<Self> {
        let two_i = AlgebraicNumber::from_i64(2) * AlgebraicNumber::i();
        let re = ((x.clone() + x.galois(59)) * AlgebraicNumber::from_rational(&Rational::new(
            1.into(),
            2.into(),
        )))
        .to_rational()?;
        let im = (x.clone() - x.galois(59)).checked_div(&two_i)?.to_rational()?;
        let g = GaussianRational { re, im };
        if g.to_algebraic() == *x {
            Some(g)
        } else {
            None
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", self.im);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*i", self.re, sign, self.im.abs())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::from_ints(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
    fn from_rational(q: &Rational) -> Self {
        GaussianRational {
            re: q.clone(),
            im: Rational::zero(),
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        if self.im.is_zero() {
            Some(self.re.clone())
        } else {
            None
        }
    }
    fn mul_int(&self, n: &BigInt) -> Self {
        let n = Rational::from_integer(n.clone());
        GaussianRational {
            re: &self.re * &n,
            im: &self.im * &n,
        }
    }
}

fn mul_impl(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    if b.im.is_zero() {
        return GaussianRational {
            re: &a.re * &b.re,
            im: &a.im * &b.re,
        };
    }
    if a.im.is_zero() {
        return GaussianRational {
            re: &a.re * &b.re,
            im: &a.re * &b.im,
        };
    }
    GaussianRational {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &'b GaussianRational) -> GaussianRational {
                $body(self, rhs)
            }
        }
        impl<'b> $tr<&'b GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &'b GaussianRational) -> GaussianRational {
                $body(&self, rhs)
            }
        }
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &GaussianRational, b: &GaussianRational| GaussianRational {
    re: &a.re + &b.re,
    im: &a.im + &b.im
});
forward_binop!(Sub, sub, |a: &GaussianRational, b: &GaussianRational| GaussianRational {
    re: &a.re - &b.re,
    im: &a.im - &b.im
});
forward_binop!(Mul, mul, mul_impl);

impl<'a> AddAssign<&'a GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &'a GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> SubAssign<&'a GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &'a GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> MulAssign<&'a GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &'a GaussianRational) {
        *self = mul_impl(self, rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use proptest::prelude::*;

    type G = GaussianRational;

    #[test]
    fn i_squared() {
        assert_eq!(G::i() * G::i(), -G::one());
        assert_eq!(G::from_ints(3, 4).norm(), rat(25, 1));
        assert_eq!(alloc::format!("{}", G::from_ints(-7, -24)), "-7 - 24*i");
    }

    fn arb() -> impl Strategy<Value = G> {
        (-50i64..50, 1i64..9, -50i64..50, 1i64..9)
            .prop_map(|(a, b, c, d)| G::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn agrees_with_cyclotomic_arithmetic(a in arb(), b in arb()) {
            let prod = (a.clone() * &b).to_algebraic();
            prop_assert_eq!(prod, a.to_algebraic() * b.to_algebraic());
            prop_assert_eq!(G::from_algebraic(&(a.clone() + &b).to_algebraic()), Some(a.clone() + &b));
            if !a.is_zero() {
                prop_assert!((a.inv().unwrap() * &a).is_one());
            }
        }
    }

    #[test]
    fn zeta_is_not_gaussian() {
        assert!(G::from_algebraic(&AlgebraicNumber::zeta()).is_none());
    }
}
