//! Decompositions f = g ∘ h for a known inner function h, normalization of
//! finite-order Möbius maps to scalings, and the x²-model map φ₁.

mod phi1;
mod scaling;

pub use phi1::{
    check_ramification_constant, phi1, phi1_conjugated_group, r_bar, ramification_constant, s_bar,
    sigma, t_bar,
};
pub use scaling::{cube_branch, normalize_element_to_scaling};

use alloc::vec;
use alloc::vec::Vec;

use crate::exactfield::Field;
use crate::icosa::IcosaError;
use crate::polyring::linalg::nullspace;
use crate::polyring::{Poly, PolyError, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("degree of the inner function ({inner}) does not divide {outer}")]
    DegreeMismatch { outer: usize, inner: usize },
    #[error("inner function is constant")]
    ConstantInner,
    #[error("fixed points are not in the coefficient field")]
    FixedPointsOutsideField,
    #[error("element has a single fixed point")]
    ParabolicElement,
    #[error("element does not have finite order at least 2")]
    NotFiniteOrder,
    #[error("factored form differs at coefficient {index}")]
    FactorMismatch { index: usize },
    #[error(transparent)]
    Icosa(#[from] IcosaError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// f = outer ∘ inner.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<F> {
    pub outer: RationalFunction<F>,
    pub inner: RationalFunction<F>,
    pub target: RationalFunction<F>,
}

impl<F: Field> Decomposition<F> {
    /// Recomputes outer ∘ inner by homogeneous substitution and compares it
    /// with the target by cross-multiplication.
    pub fn verify(&self) -> bool {
        let k = self.outer.degree();
        let w = powers_uv(&self.inner, k);
        let num = combine(self.outer.num(), &w);
        let den = combine(self.outer.den(), &w);
        k * self.inner.degree() == self.target.degree()
            && self.target.num() * &den == self.target.den() * &num
    }
}

/// W_i = U^i V^(k−i) for h = U/V.
fn powers_uv<F: Field>(h: &RationalFunction<F>, k: usize) -> Vec<Poly<F>> {
    let mut up = vec![Poly::one()];
    let mut vp = vec![Poly::one()];
    for i in 1..=k {
        up.push(&up[i - 1] * h.num());
        vp.push(&vp[i - 1] * h.den());
    }
    (0..=k).map(|i| &up[i] * &vp[k - i]).collect()
}

fn combine<F: Field>(p: &Poly<F>, w: &[Poly<F>]) -> Poly<F> {
    let mut acc = Poly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &w[i].scale(c);
        }
    }
    acc
}

/// Finds g with f = g ∘ h, or `None` when f ∉ k(h).
///
/// With g = A/B of degree k = deg f / deg h the condition
/// f_num·B(h) = f_den·A(h) is linear in the coefficients of A and B. A
/// solution is automatically reduced: a common factor would drop the degree
/// of g ∘ h below deg f.
pub fn left_factor<F: Field>(
    f: &RationalFunction<F>,
    h: &RationalFunction<F>,
) -> Result<Option<Decomposition<F>>, DecompError> {
    if h.is_constant() {
        return Err(DecompError::ConstantInner);
    }
    let (n, m) = (f.degree(), h.degree());
    if n % m != 0 {
        return Err(DecompError::DegreeMismatch { outer: n, inner: m });
    }
    let k = n / m;
    let w = powers_uv(h, k);
    // unknowns: a_0..a_k then b_0..b_k
    let mut cols: Vec<Poly<F>> = Vec::with_capacity(2 * k + 2);
    for wi in &w {
        cols.push(-&(f.den() * wi));
    }
    for wi in &w {
        cols.push(f.num() * wi);
    }
    let rows = cols.iter().map(|p| p.deg()).max().unwrap_or(0) + 1;
    let mat: Vec<Vec<F>> = (0..rows)
        .map(|r| cols.iter().map(|p| p.coeff(r)).collect())
        .collect();
    let ns = nullspace(&mat);
    if ns.len() != 1 {
        return Ok(None);
    }
    let v = &ns[0];
    let a = Poly::new(v[..=k].to_vec());
    let b = Poly::new(v[k + 1..].to_vec());
    if b.is_zero() || a.deg().max(b.deg()) != k {
        return Ok(None);
    }
    let l = b.leading().inv().expect("nonzero");
    let outer = RationalFunction::from_reduced_parts(a.scale(&l), b.scale(&l))?;
    Ok(Some(Decomposition {
        outer,
        inner: h.clone(),
        target: f.clone(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Rational;
    use crate::icosa::phi;
    use proptest::prelude::*;

    type P = Poly<Rational>;
    type R = RationalFunction<Rational>;

    fn xpow(k: usize) -> R {
        R::from_poly(Poly::monomial(Rational::from_i64(1), k))
    }

    #[test]
    fn polynomial_examples() {
        let f = R::from_poly(P::from_i64s(&[3, 0, 2, 0, 1]));
        let d = left_factor(&f, &xpow(2)).unwrap().unwrap();
        assert_eq!(d.outer, R::from_poly(P::from_i64s(&[3, 2, 1])));
        assert!(d.verify());
        assert_eq!(left_factor(&xpow(3), &xpow(2)).unwrap_err(), DecompError::DegreeMismatch { outer: 3, inner: 2 });
        let odd = R::from_poly(P::from_i64s(&[0, 1, 0, 1]));
        assert!(left_factor(&odd, &R::from_poly(P::from_i64s(&[0, 0, 0, 0, 0, 0, 1]))).is_err());
        let f4 = R::from_poly(P::from_i64s(&[0, 1, 0, 0, 1]));
        assert!(left_factor(&f4, &xpow(2)).unwrap().is_none());
    }

    #[test]
    fn phi_through_x5() {
        let d = left_factor(&phi(), &xpow(5)).unwrap().unwrap();
        assert_eq!(d.outer.degree(), 12);
        assert!(d.verify());
        assert!(left_factor(&phi(), &xpow(2)).unwrap().is_none());
    }

    fn arb_rf(max_deg: usize) -> impl Strategy<Value = R> {
        (
            proptest::collection::vec(-5i64..6, 1..=max_deg + 1),
            proptest::collection::vec(-5i64..6, 1..=max_deg + 1),
        )
            .prop_filter_map("nonconstant", |(a, b)| {
                let den = P::from_i64s(&b);
                if den.is_zero() {
                    return None;
                }
                let r = R::new(P::from_i64s(&a), den).ok()?;
                (!r.is_constant()).then_some(r)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn recovers_outer(g in arb_rf(4), h in arb_rf(3)) {
            let f = g.compose(&h).unwrap();
            let d = left_factor(&f, &h).unwrap();
            prop_assert!(d.is_some());
            let d = d.unwrap();
            prop_assert_eq!(&d.outer, &g);
            prop_assert!(d.verify());
        }
    }
}
