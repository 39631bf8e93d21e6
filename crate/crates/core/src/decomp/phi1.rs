use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactfield::{AlgebraicNumber, Field, GaussianRational};
use crate::icosa::{build_a5, phi, MoebiusGroup, MoebiusMap};
use crate::polyring::{Poly, RationalFunction};

use super::DecompError;

type G = GaussianRational;

/// Product of factors given as (power, re, im) term lists.
fn product(factors: &[&[(usize, i64, i64)]]) -> Poly<G> {
    let polys: Vec<Poly<G>> = factors
        .iter()
        .map(|f| {
            let n = f.iter().map(|t| t.0).max().unwrap_or(0);
            let mut c = alloc::vec![G::zero(); n + 1];
            for &(k, re, im) in f.iter() {
                c[k] = G::from_ints(re, im);
            }
            Poly::new(c)
        })
        .collect();
    Poly::product(&polys)
}

pub fn r_bar() -> Poly<G> {
    product(&[
        &[(8, 25, 0), (4, -210, 280), (0, -7, -24)],
        &[(4, 15, 0), (2, 10, 20), (0, -9, 12)],
        &[(8, 25, 0), (6, 300, 600), (4, 1110, -1480), (2, -660, -120), (0, -7, -24)],
    ])
}

pub fn s_bar() -> Poly<G> {
    product(&[
        &[(2, 1, 0), (0, -1, 0)],
        &[(2, 5, 0), (0, 3, -4)],
        &[(8, 25, 0), (6, -100, -200), (4, 630, -840), (2, 220, 40), (0, -7, -24)],
    ])
}

pub fn t_bar() -> Poly<G> {
    product(&[
        &[(1, 1, 0)],
        &[(4, 5, 0), (2, 10, 0), (0, 1, 0)],
        &[(4, 1, 0), (2, 10, 0), (0, 5, 0)],
        &[(4, 125, 0), (2, -150, 200), (0, -7, -24)],
        &[(4, 5, 0), (2, -30, 40), (0, -7, -24)],
        &[(4, 5, 0), (0, 3, -4)],
        &[(4, 5, 0), (2, -10, -20), (0, -27, 36)],
        &[(4, 45, 0), (2, -10, -20), (0, -3, 4)],
    ])
}

/// σ = (ix + 1)/(−ix + 1), conjugating −1/x into −x.
pub fn sigma() -> MoebiusMap<G> {
    let i = G::i();
    MoebiusMap::new(i.clone(), G::one(), -i, G::one()).expect("det = 2i")
}

fn first_difference(a: &Poly<G>, b: &Poly<G>) -> Option<usize> {
    (0..=a.deg().max(b.deg())).find(|&k| a.coeff(k) != b.coeff(k))
}

/// φ₁ = φ ∘ σ⁻¹ over Q(i), checked against 64 R̄³/S̄⁵.
pub fn phi1() -> Result<RationalFunction<G>, DecompError> {
    let p = phi().map(G::from_rational);
    let f = sigma().inverse().pull_back(&p)?;
    let lhs = f.num() * &s_bar().pow(5);
    let rhs = &r_bar().pow(3).scale(&G::from_i64(64)) * f.den();
    match first_difference(&lhs, &rhs) {
        None => Ok(f),
        Some(index) => Err(DecompError::FactorMismatch { index }),
    }
}

/// Checks 64R̄³ − 1728S̄⁵ = c·T̄².
pub fn check_ramification_constant(c: &G) -> Result<(), DecompError> {
    let lhs = &r_bar().pow(3).scale(&G::from_i64(64)) - &s_bar().pow(5).scale(&G::from_i64(1728));
    let rhs = t_bar().pow(2).scale(c);
    match first_difference(&lhs, &rhs) {
        None => Ok(()),
        Some(index) => Err(DecompError::FactorMismatch { index }),
    }
}

/// The constant c with 64R̄³ − 1728S̄⁵ = c·T̄², if one exists.
pub fn ramification_constant() -> Option<G> {
    let lhs = &r_bar().pow(3).scale(&G::from_i64(64)) - &s_bar().pow(5).scale(&G::from_i64(1728));
    let t2 = t_bar().pow(2);
    let c = lhs.leading().checked_div(&t2.leading())?;
    (lhs == t2.scale(&c)).then_some(c)
}

/// σA5σ⁻¹ over Q(ζ60).
pub fn phi1_conjugated_group() -> MoebiusGroup<AlgebraicNumber> {
    let s = sigma().map(G::to_algebraic);
    build_a5().conjugate(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::left_factor;
    use crate::exactfield::Rational;
    use crate::icosa::orbit_invariance_check;

    #[test]
    fn phi1_factored_form() {
        let f = phi1().unwrap();
        assert_eq!(f.degree(), 60);
        let c = ramification_constant().unwrap();
        assert_eq!(c, G::from_ints(256, 512));
        assert!(check_ramification_constant(&c).is_ok());
        assert!(check_ramification_constant(&G::from_ints(512, 256)).is_err());
    }

    #[test]
    fn x2_component() {
        let f = phi1().unwrap();
        let x2 = RationalFunction::from_poly(Poly::monomial(G::one(), 2));
        let d = left_factor(&f, &x2).unwrap().unwrap();
        assert_eq!(d.outer.degree(), 30);
        assert!(d.verify());
    }

    #[test]
    fn conjugated_group_contains_minus_x() {
        let g = phi1_conjugated_group();
        assert_eq!(g.order(), 60);
        let minus = MoebiusMap::scaling(-AlgebraicNumber::one()).unwrap();
        assert!(g.contains(&minus));
        let f = phi1().unwrap().map(G::to_algebraic);
        assert!(orbit_invariance_check(&g, &f));
        let _ = Rational::from_i64(0);
    }
}
