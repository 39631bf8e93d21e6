use alloc::vec::Vec;

use crate::exactfield::Field;

use super::{Poly, PolyError};

/// A reduced fraction Ψ/Υ with Υ monic and gcd(Ψ, Υ) = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero()));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.deg() > 0 {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        } else {
            (num, den)
        };
        let l = den.leading().inv().expect("nonzero");
        num = num.scale(&l);
        den = den.scale(&l);
        Ok(RationalFunction { num, den })
    }

    /// Skips the gcd. The caller guarantees gcd(num, den) = 1 and a monic
    /// denominator.
    pub fn from_reduced_parts(num: Poly<F>, den: Poly<F>) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        debug_assert!(den.leading().is_one());
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn identity() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// (a x + b)/(c x + d).
    pub fn mobius(a: F, b: F, c: F, d: F) -> Result<Self, PolyError> {
        Self::new(
            Poly::new(alloc::vec![b, a]),
            Poly::new(alloc::vec![d, c]),
        )
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    /// Degree of the map: max(deg Ψ, deg Υ).
    pub fn degree(&self) -> usize {
        self.num.deg().max(self.den.deg())
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Value at x, `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        self.num.eval(x).checked_div(&self.den.eval(x))
    }

    /// Σ pᵢ U^i V^(n−i) for the homogenized substitution x ↦ U/V.
    fn hom_substitute(p: &Poly<F>, n: usize, u_pows: &[Poly<F>], v_pows: &[Poly<F>]) -> Poly<F> {
        let mut acc = Poly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = (&u_pows[i] * &v_pows[n - i]).scale(c);
            acc = &acc + &term;
        }
        acc
    }

    /// The composition self ∘ inner.
    pub fn compose(&self, inner: &Self) -> Result<Self, PolyError> {
        if inner.is_constant() {
            return Err(PolyError::ConstantInner);
        }
        let n = self.degree();
        let mut u_pows: Vec<Poly<F>> = Vec::with_capacity(n + 1);
        let mut v_pows: Vec<Poly<F>> = Vec::with_capacity(n + 1);
        u_pows.push(Poly::one());
        v_pows.push(Poly::one());
        for k in 1..=n {
            u_pows.push(&u_pows[k - 1] * &inner.num);
            v_pows.push(&v_pows[k - 1] * &inner.den);
        }
        let num = Self::hom_substitute(&self.num, n, &u_pows, &v_pows);
        let den = Self::hom_substitute(&self.den, n, &u_pows, &v_pows);
        Self::new(num, den)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .expect("nonzero denominators")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominators")
    }

    pub fn div(&self, o: &Self) -> Result<Self, PolyError> {
        if o.num.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// Coefficient change along a field embedding, which keeps the fraction
    /// reduced and the denominator monic.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> RationalFunction<G> {
        RationalFunction::from_reduced_parts(self.num.map(f), self.den.map(f))
            .expect("nonzero denominator")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rational};
    use proptest::prelude::*;

    type P = Poly<Rational>;
    type R = RationalFunction<Rational>;

    #[test]
    fn examples() {
        let f = R::from_poly(P::from_i64s(&[0, 0, 1]));
        let g = R::from_poly(P::from_i64s(&[1, 1]));
        assert_eq!(f.compose(&g).unwrap(), R::from_poly(P::from_i64s(&[1, 2, 1])));
        let inv = R::new(P::one(), P::x()).unwrap();
        assert_eq!(inv.compose(&inv).unwrap(), R::identity());
        assert_eq!(f.compose(&R::identity()).unwrap(), f);
        assert_eq!(f.compose(&R::constant(rat(2, 1))), Err(PolyError::ConstantInner));
        let h = R::new(P::from_i64s(&[2, 2]), P::from_i64s(&[-2, 0, 2])).unwrap();
        // (2x+2)/(2x²−2) = 1/(x−1)
        assert_eq!(h.num(), &P::from_i64s(&[1]));
        assert_eq!(h.den(), &P::from_i64s(&[-1, 1]));
    }

    fn arb_rf(max_deg: usize) -> impl Strategy<Value = R> {
        (
            proptest::collection::vec(-6i64..7, 1..=max_deg + 1),
            proptest::collection::vec(-6i64..7, 1..=max_deg + 1),
        )
            .prop_filter_map("valid", |(a, b)| {
                let den = P::from_i64s(&b);
                if den.is_zero() {
                    return None;
                }
                R::new(P::from_i64s(&a), den).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(80))]

        #[test]
        fn degree_is_multiplicative(f in arb_rf(4), g in arb_rf(4)) {
            prop_assume!(!g.is_constant());
            let h = f.compose(&g).unwrap();
            prop_assert_eq!(h.degree(), f.degree() * g.degree());
        }
    }
}
