use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactfield::{Field, Rational};

use super::PolyError;

/// Dense univariate polynomial, lowest degree first. The zero polynomial is
/// the empty vector and every other polynomial has a nonzero leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The variable x.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg 0 = 0, for places where the zero polynomial cannot occur
    /// or does not matter.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x;
            acc += c;
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_int(&BigInt::from(k)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading().inv() {
            Some(l) => self.scale(&l),
            None => Self::zero(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![F::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Euclidean division: returns (q, r) with self = q·d + r and deg r < deg d.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        let dd = d.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lead_inv = d.leading().inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(c.clone() * dj);
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact quotient; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Pseudo-remainder: lc(d)^(deg self − deg d + 1)·self mod d.
    pub fn pseudo_rem(&self, d: &Self) -> Result<Self, PolyError> {
        let dd = d.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lc = d.leading();
        let mut r = self.clone();
        let mut e = (self.deg() + 1).saturating_sub(dd);
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let s = Self::monomial(r.leading(), dr - dd);
            r = &r.scale(&lc) - &(&s * d);
            e = e.saturating_sub(1);
        }
        Ok(r.scale(&lc.pow(e as u64)))
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).deg() == 0,
        }
    }

    /// Number of distinct roots over an algebraic closure.
    pub fn distinct_root_count(&self) -> usize {
        if self.deg() == 0 {
            return 0;
        }
        let g = self.gcd(&self.derivative());
        self.deg() - g.deg()
    }

    /// Composition self(inner).
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// The polynomial with coefficient k moved to x^(k·m), i.e. self(x^m).
    pub fn inflate(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![F::zero(); self.deg() * m + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * m] = c.clone();
        }
        Self::new(v)
    }

    /// Multiplicity of x as a factor.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Product of many polynomials by balanced splitting.
    pub fn product(items: &[Self]) -> Self {
        match items.len() {
            0 => Self::one(),
            1 => items[0].clone(),
            n => &Self::product(&items[..n / 2]) * &Self::product(&items[n / 2..]),
        }
    }
}

impl Poly<Rational> {
    /// Splits into a positive rational content and a primitive polynomial with
    /// integer coefficients and positive leading coefficient.
    pub fn primitive_integer(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    /// Primitive integer version of self as a rational polynomial.
    pub fn primitive(&self) -> Self {
        let (_, p) = self.primitive_integer();
        Poly::new(p.into_iter().map(Rational::from_integer).collect())
    }

    pub fn from_bigints(cs: &[BigInt]) -> Self {
        Poly::new(cs.iter().cloned().map(Rational::from_integer).collect())
    }
}

impl<F: fmt::Debug> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<F: Field + fmt::Display> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*x", c)?,
                _ => write!(f, "({})*x^{}", c, k)?,
            }
        }
        Ok(())
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &'a Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(short.coeffs.iter()) {
            *a += b;
        }
        Poly::new(v)
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &'a Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = self.coeffs.clone();
        v.resize(n, F::zero());
        for (a, b) in v.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
        Poly::new(v)
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &'a Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += &(a.clone() * b);
                }
            }
        }
        Poly::new(v)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Poly<F>) -> Poly<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Poly<F>) -> Poly<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Poly<F>) -> Poly<F> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use proptest::prelude::*;

    type P = Poly<Rational>;

    pub(crate) fn arb_poly(max_deg: usize) -> impl Strategy<Value = P> {
        proptest::collection::vec(-9i64..10, 1..=max_deg + 1).prop_map(|v| P::from_i64s(&v))
    }

    #[test]
    fn basics() {
        let p = P::from_i64s(&[1, 0, 1]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&rat(2, 1)), rat(5, 1));
        assert_eq!(P::from_i64s(&[0, 0, 0]).degree(), None);
        assert_eq!(p.derivative(), P::from_i64s(&[0, 2]));
        assert_eq!(p.inflate(3), P::from_i64s(&[1, 0, 0, 0, 0, 0, 1]));
        let q = P::from_i64s(&[1, 1]);
        assert_eq!(p.compose(&q), P::from_i64s(&[2, 2, 1]));
    }

    #[test]
    fn division_and_gcd() {
        let a = P::from_i64s(&[-1, 0, 1]); // x² − 1
        let b = P::from_i64s(&[1, 1]); // x + 1
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, P::from_i64s(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&P::from_i64s(&[-1, 1])), P::from_i64s(&[-1, 1]));
        assert!(a.div_rem(&P::zero()).is_err());
        assert!(a.is_squarefree());
        assert!(!(&a * &b).is_squarefree());
        assert_eq!((&a * &b).distinct_root_count(), 2);
    }

    #[test]
    fn primitive_integer_part() {
        let p = P::new(vec![rat(1, 2), rat(-3, 4)]);
        let (c, v) = p.primitive_integer();
        assert_eq!(v, vec![BigInt::from(-2), BigInt::from(3)]);
        assert_eq!(c, rat(-1, 4));
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in arb_poly(8), b in arb_poly(5)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.is_zero() || r.deg() < b.deg());
        }

        #[test]
        fn pseudo_rem_matches_field_rem(a in arb_poly(7), b in arb_poly(4)) {
            prop_assume!(!b.is_zero() && b.deg() <= a.deg() && !a.is_zero());
            let pr = a.pseudo_rem(&b).unwrap();
            let (_, r) = a.div_rem(&b).unwrap();
            let e = (a.deg() - b.deg() + 1) as u64;
            prop_assert_eq!(pr, r.scale(&Field::pow(&b.leading(), e)));
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(6), b in arb_poly(6), x in -5i64..5) {
            let x = rat(x, 1);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
        }
    }
}
