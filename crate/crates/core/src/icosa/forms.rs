use crate::exactfield::{Field, Rational};
use crate::polyring::{Poly, RationalFunction};

use super::IcosaError;

/// R = x²⁰ − 228x¹⁵ + 494x¹⁰ + 228x⁵ + 1, vanishing on the 20 face centres.
pub fn r_form() -> Poly<Rational> {
    sparse(&[(0, 1), (5, 228), (10, 494), (15, -228), (20, 1)])
}

/// S = x(x¹⁰ + 11x⁵ − 1), the 11 finite vertices (the twelfth is ∞).
pub fn s_form() -> Poly<Rational> {
    sparse(&[(1, -1), (6, 11), (11, 1)])
}

/// T = x³⁰ + 522x²⁵ − 10005x²⁰ − 10005x¹⁰ − 522x⁵ + 1, the 30 edge midpoints.
pub fn t_form() -> Poly<Rational> {
    sparse(&[
        (0, 1),
        (5, -522),
        (10, -10005),
        (20, -10005),
        (25, 522),
        (30, 1),
    ])
}

fn sparse(terms: &[(usize, i64)]) -> Poly<Rational> {
    let n = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut c = alloc::vec![0i64; n + 1];
    for &(k, v) in terms {
        c[k] = v;
    }
    Poly::from_i64s(&c)
}

/// φ = −R³/S⁵, the generator of the A5-fixed field.
pub fn phi() -> RationalFunction<Rational> {
    let r = r_form();
    let s = s_form();
    RationalFunction::new(-&r.pow(3), s.pow(5)).expect("S ≠ 0")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub degree: usize,
    pub coefficients_checked: usize,
}

/// Checks T² = R³ + 1728·S⁵ coefficient by coefficient.
pub fn verify_icosahedral_identity() -> Result<IdentityReport, IcosaError> {
    let r = r_form();
    let s = s_form();
    let t = t_form();
    let lhs = t.pow(2);
    let rhs = &r.pow(3) + &s.pow(5).scale(&Rational::from_i64(1728));
    let n = lhs.deg().max(rhs.deg());
    for k in 0..=n {
        if lhs.coeff(k) != rhs.coeff(k) {
            return Err(IcosaError::IdentityFailed { index: k });
        }
    }
    Ok(IdentityReport {
        degree: n,
        coefficients_checked: n + 1,
    })
}

/// Distinct-root data of R, S, T: the ramification over 0, ∞ and 1728.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationReport {
    pub r_roots: usize,
    pub s_roots_with_infinity: usize,
    pub t_roots: usize,
    pub pairwise_coprime: bool,
    pub squarefree: bool,
}

pub fn ramification_report() -> RamificationReport {
    let (r, s, t) = (r_form(), s_form(), t_form());
    let one = |p: &Poly<Rational>, q: &Poly<Rational>| p.gcd(q).deg() == 0;
    RamificationReport {
        r_roots: r.distinct_root_count(),
        s_roots_with_infinity: s.distinct_root_count() + 1,
        t_roots: t.distinct_root_count(),
        pairwise_coprime: one(&r, &s) && one(&r, &t) && one(&s, &t),
        squarefree: r.is_squarefree() && s.is_squarefree() && t.is_squarefree(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use num_traits::Zero;

    #[test]
    fn closed_form_shape() {
        assert_eq!(r_form().coeff(15), Rational::from_i64(-228));
        let p = phi();
        assert_eq!(p.degree(), 60);
        assert_eq!(p.eval(&rat(1, 1)).unwrap(), rat(-122023936, 161051));
    }

    #[test]
    fn identity_and_values() {
        let rep = verify_icosahedral_identity().unwrap();
        assert_eq!(rep.degree, 60);
        let one = rat(1, 1);
        let t1 = t_form().eval(&one);
        assert_eq!(&t1 * &t1, Rational::from_i64(400320064));
        assert_eq!(r_form().eval(&one), Rational::from_i64(496));
        assert_eq!(s_form().eval(&one), Rational::from_i64(11));
        assert!(s_form().eval(&Rational::from_i64(0)).is_zero());
    }

    #[test]
    fn ramification() {
        let r = ramification_report();
        assert_eq!((r.r_roots, r.s_roots_with_infinity, r.t_roots), (20, 12, 30));
        assert!(r.pairwise_coprime && r.squarefree);
    }
}
