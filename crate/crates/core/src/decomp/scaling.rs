use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactfield::{AlgebraicNumber, Field};
use crate::icosa::{build_a5, phi, MoebiusMap};
use crate::polyring::{Poly, RationalFunction};

use super::{left_factor, DecompError, Decomposition};

type M = MoebiusMap<AlgebraicNumber>;

/// Eigenvector of [[a, b], [c, d]] for the eigenvalue l, as a point (p : q).
fn eigenvector(g: &M, l: &AlgebraicNumber) -> (AlgebraicNumber, AlgebraicNumber) {
    let [a, b, c, d] = g.entries();
    let v = (b.clone(), l.clone() - a);
    if !v.0.is_zero() || !v.1.is_zero() {
        return v;
    }
    (l.clone() - d, c.clone())
}

/// Eigenvalues (λ1, λ2) with λ1/λ2 a primitive m-th root of unity.
fn eigenvalues(g: &M, m: usize) -> Result<(AlgebraicNumber, AlgebraicNumber), DecompError> {
    let tr = g.trace();
    let det = g.det();
    if m == 2 {
        // λ = ±√(−det)
        let l = (-det).sqrt().ok_or(DecompError::FixedPointsOutsideField)?;
        return Ok((-l.clone(), l));
    }
    if 60 % m != 0 {
        return Err(DecompError::FixedPointsOutsideField);
    }
    for j in 1..m {
        if j.gcd(&m) != 1 {
            continue;
        }
        let c = AlgebraicNumber::zeta_pow((60 / m * j) as i64);
        let Some(l2) = tr.checked_div(&(c.clone() + &AlgebraicNumber::one())) else {
            continue;
        };
        if c.clone() * &l2 * &l2 == det {
            return Ok((c * &l2, l2));
        }
    }
    Err(DecompError::FixedPointsOutsideField)
}

/// σ with σγσ⁻¹ = c·x, c a primitive m-th root of unity, m the order of γ.
/// σ sends the two fixed points of γ to ∞ and 0.
pub fn normalize_element_to_scaling(gamma: &M) -> Result<M, DecompError> {
    let m = gamma.order(60).ok_or(DecompError::NotFiniteOrder)?;
    if m < 2 {
        return Err(DecompError::NotFiniteOrder);
    }
    let [_, b, c, _] = gamma.entries();
    if b.is_zero() && c.is_zero() {
        return Ok(M::identity());
    }
    let tr = gamma.trace();
    if (tr.clone() * &tr - gamma.det().mul_int(&4.into())).is_zero() {
        return Err(DecompError::ParabolicElement);
    }
    let (l1, l2) = eigenvalues(gamma, m)?;
    let v1 = eigenvector(gamma, &l1);
    let v2 = eigenvector(gamma, &l2);
    let p = M::new(v1.0, v2.0, v1.1, v2.1)?;
    Ok(p.inverse())
}

/// φ∘σ⁻¹ for σ normalizing an order-3 element of A5, decomposed through x³.
pub fn cube_branch() -> Result<Decomposition<AlgebraicNumber>, DecompError> {
    let g = build_a5();
    let gamma = g
        .elements()
        .iter()
        .find(|e| e.order(3) == Some(3))
        .expect("A5 has elements of order 3");
    let s = normalize_element_to_scaling(gamma)?;
    let f = s.inverse().pull_back(&phi().map(AlgebraicNumber::from_rational))?;
    let x3 = RationalFunction::from_poly(Poly::monomial(AlgebraicNumber::one(), 3));
    left_factor(&f, &x3)?.ok_or(DecompError::FactorMismatch { index: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_scaling_of_order(m: &M, k: usize) -> bool {
        let [_, b, c, _] = m.entries();
        b.is_zero() && c.is_zero() && m.order(60) == Some(k)
    }

    #[test]
    fn involution_to_minus_x() {
        let z = AlgebraicNumber::zero();
        let one = AlgebraicNumber::one();
        let gamma = M::new(z.clone(), -one.clone(), one.clone(), z.clone()).unwrap();
        let s = normalize_element_to_scaling(&gamma).unwrap();
        let conj = s.compose(&gamma).compose(&s.inverse());
        assert_eq!(conj, M::scaling(-one.clone()).unwrap());
        // (ix+1)/(−ix+1) also works
        let i = AlgebraicNumber::i();
        let s2 = M::new(i.clone(), one.clone(), -i, one.clone()).unwrap();
        assert_eq!(s2.compose(&gamma).compose(&s2.inverse()), M::scaling(-one).unwrap());
    }

    #[test]
    fn scalings_are_fixed() {
        let e = AlgebraicNumber::epsilon();
        let g = M::scaling(e).unwrap();
        assert!(normalize_element_to_scaling(&g).unwrap().is_identity());
        let minus = M::scaling(-AlgebraicNumber::one()).unwrap();
        assert!(normalize_element_to_scaling(&minus).unwrap().is_identity());
        let t = M::new(AlgebraicNumber::one(), AlgebraicNumber::one(), AlgebraicNumber::zero(), AlgebraicNumber::one()).unwrap();
        assert_eq!(normalize_element_to_scaling(&t), Err(DecompError::NotFiniteOrder));
    }

    #[test]
    fn every_a5_element_normalizes() {
        let g = build_a5();
        for e in g.elements().iter().filter(|e| !e.is_identity()) {
            let k = e.order(60).unwrap();
            let s = normalize_element_to_scaling(e).unwrap();
            let conj = s.compose(e).compose(&s.inverse());
            assert!(is_scaling_of_order(&conj, k));
        }
    }

    #[test]
    fn x3_branch() {
        let d = cube_branch().unwrap();
        assert_eq!(d.outer.degree(), 20);
    }
}
