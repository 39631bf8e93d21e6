//! The eight signature cases for reduced automorphism group A5 and the curve
//! equations y² = f(x) in the x⁵-model (built from φ) and the x²-model (built
//! from φ₁).

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::decomp::{r_bar, s_bar, t_bar};
use crate::exactfield::{Field, GaussianRational, Rational};
use crate::icosa::{r_form, s_form, t_form};
use crate::polyring::modp::{is_squarefree_gaussian, is_squarefree_rational};
use crate::polyring::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("genus {0} admits no curve with reduced automorphism group A5")]
    NotInLocus(usize),
    #[error("expected {expected} branch values, got {got}")]
    WrongParameterCount { expected: usize, got: usize },
    #[error("branch value {0} is a branch point of the quotient map")]
    DegenerateBranchValue(Rational),
    #[error("branch value {0} is repeated")]
    DuplicateBranchValue(Rational),
    #[error("polynomial is neither even nor x times even")]
    NotEven,
    #[error("degree {degree} is not 2g+1 or 2g+2 for genus {genus}")]
    DegreeCheck { degree: usize, genus: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AutGroup {
    Z2xA5,
    SL2_5,
}

impl fmt::Display for AutGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AutGroup::Z2xA5 => "Z2xA5",
            AutGroup::SL2_5 => "SL2_5",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multiplier {
    R,
    S,
    T,
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Multiplier::R => "R",
            Multiplier::S => "S",
            Multiplier::T => "T",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    X,
    X2,
    X5,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::X => "x",
            ModelKind::X2 => "x2",
            ModelKind::X5 => "x5",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseDescriptor {
    pub case_no: u8,
    pub group: AutGroup,
    pub delta: usize,
    pub multipliers: Vec<Multiplier>,
    pub genus: usize,
}

use Multiplier::{R, S, T};

/// (g − offset)/30 = δ per case, and the extra factors of f.
const CASES: [(i64, &[Multiplier]); 8] = [
    (-1, &[]),
    (5, &[S]),
    (15, &[S, R]),
    (9, &[R]),
    (14, &[T]),
    (20, &[T, S]),
    (24, &[T, R]),
    (30, &[T, R, S]),
];

/// The Table-1 style case of a genus.
pub fn classify_genus(g: usize) -> Result<CaseDescriptor, FamilyError> {
    if g < 2 {
        return Err(FamilyError::NotInLocus(g));
    }
    for (k, (off, mult)) in CASES.iter().enumerate() {
        let diff = g as i64 - off;
        if diff >= 0 && diff % 30 == 0 {
            return Ok(CaseDescriptor {
                case_no: k as u8 + 1,
                group: if k < 4 { AutGroup::Z2xA5 } else { AutGroup::SL2_5 },
                delta: (diff / 30) as usize,
                multipliers: mult.to_vec(),
                genus: g,
            });
        }
    }
    Err(FamilyError::NotInLocus(g))
}

/// Smallest genus of a case with the given δ.
pub fn genus_for_case(case_no: u8, delta: usize) -> Option<usize> {
    let (off, _) = CASES.get(case_no.checked_sub(1)? as usize)?;
    let g = off + 30 * delta as i64;
    (g >= 2).then_some(g as usize)
}

/// y² = f(x) together with where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveModel<F> {
    pub f: Poly<F>,
    pub genus: usize,
    pub model: ModelKind,
    pub case: CaseDescriptor,
    pub params: Vec<Rational>,
}

fn check_lambda(l: &Rational) -> Result<(), FamilyError> {
    if l.is_zero() || *l == Rational::from_i64(1728) {
        return Err(FamilyError::DegenerateBranchValue(l.clone()));
    }
    Ok(())
}

/// Λ = −R³ − λS⁵, the fibre of φ over λ.
pub fn lambda_factor_x5(l: &Rational) -> Result<Poly<Rational>, FamilyError> {
    check_lambda(l)?;
    Ok(lambda_factor_x5_unchecked(l))
}

pub(crate) fn lambda_factor_x5_unchecked(l: &Rational) -> Poly<Rational> {
    let psi = -&r_form().pow(3);
    &psi - &s_form().pow(5).scale(l)
}

/// Λ̄ = 64R̄³ − λS̄⁵, the fibre of φ₁ over λ.
pub fn lambda_factor_x2(l: &Rational) -> Result<Poly<GaussianRational>, FamilyError> {
    check_lambda(l)?;
    Ok(lambda_factor_x2_unchecked(l))
}

pub(crate) fn lambda_factor_x2_unchecked(l: &Rational) -> Poly<GaussianRational> {
    let psi = r_bar().pow(3).scale(&GaussianRational::from_i64(64));
    &psi - &s_bar().pow(5).scale(&GaussianRational::from_rational(l))
}

fn check_params(case: &CaseDescriptor, ls: &[Rational]) -> Result<(), FamilyError> {
    if ls.len() != case.delta {
        return Err(FamilyError::WrongParameterCount {
            expected: case.delta,
            got: ls.len(),
        });
    }
    for (k, l) in ls.iter().enumerate() {
        check_lambda(l)?;
        if ls[..k].contains(l) {
            return Err(FamilyError::DuplicateBranchValue(l.clone()));
        }
    }
    Ok(())
}

fn check_degree<F: Field>(f: &Poly<F>, g: usize) -> Result<(), FamilyError> {
    let degree = f.deg();
    if degree != 2 * g + 1 && degree != 2 * g + 2 {
        return Err(FamilyError::DegreeCheck { degree, genus: g });
    }
    Ok(())
}

/// f = ∏Λᵢ · ∏(multipliers) with R, S, T.
pub fn curve_equation_x5(g: usize, ls: &[Rational]) -> Result<CurveModel<Rational>, FamilyError> {
    let case = classify_genus(g)?;
    check_params(&case, ls)?;
    let mut factors: Vec<Poly<Rational>> = ls.iter().map(lambda_factor_x5_unchecked).collect();
    for m in &case.multipliers {
        factors.push(match m {
            R => r_form(),
            S => s_form(),
            T => t_form(),
        });
    }
    let f = Poly::product(&factors);
    check_degree(&f, g)?;
    Ok(CurveModel {
        f,
        genus: g,
        model: ModelKind::X5,
        case,
        params: ls.to_vec(),
    })
}

/// f = ∏Λ̄ᵢ · ∏(multipliers) with R̄, S̄, T̄.
pub fn curve_equation_x2(
    g: usize,
    ls: &[Rational],
) -> Result<CurveModel<GaussianRational>, FamilyError> {
    let case = classify_genus(g)?;
    check_params(&case, ls)?;
    let mut factors: Vec<Poly<GaussianRational>> =
        ls.iter().map(lambda_factor_x2_unchecked).collect();
    for m in &case.multipliers {
        factors.push(match m {
            R => r_bar(),
            S => s_bar(),
            T => t_bar(),
        });
    }
    let f = Poly::product(&factors);
    check_degree(&f, g)?;
    Ok(CurveModel {
        f,
        genus: g,
        model: ModelKind::X2,
        case,
        params: ls.to_vec(),
    })
}

impl CurveModel<Rational> {
    pub fn is_squarefree(&self) -> bool {
        is_squarefree_rational(&self.f)
    }

    /// Distinct roots of f, plus ∞ when deg f is odd.
    pub fn weierstrass_count(&self) -> usize {
        let roots = if self.is_squarefree() { self.f.deg() } else { self.f.distinct_root_count() };
        roots + self.f.deg() % 2
    }
}

impl CurveModel<GaussianRational> {
    pub fn is_squarefree(&self) -> bool {
        is_squarefree_gaussian(&self.f)
    }

    pub fn weierstrass_count(&self) -> usize {
        let roots = if self.is_squarefree() { self.f.deg() } else { self.f.distinct_root_count() };
        roots + self.f.deg() % 2
    }
}

/// Coefficients bⱼ of x^{2j} in f, or in f/x when f is x times an even
/// polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenModel<F> {
    pub x_factor: bool,
    pub b: Vec<F>,
}

pub fn even_model<F: Field>(f: &Poly<F>) -> Result<EvenModel<F>, FamilyError> {
    let c = f.coeffs();
    if c.is_empty() {
        return Err(FamilyError::NotEven);
    }
    let odd_zero = |p: usize| c.iter().skip(p).step_by(2).all(|v| v.is_zero());
    let (x_factor, start) = if odd_zero(1) {
        (false, 0)
    } else if odd_zero(0) {
        (true, 1)
    } else {
        return Err(FamilyError::NotEven);
    };
    let b = c.iter().skip(start).step_by(2).cloned().collect();
    Ok(EvenModel { x_factor, b })
}

/// The homogeneous pull-back of f by σ⁻¹ = (x − 1)/(ix + i), as a form of
/// degree n; for n = 2g+2 its roots are σ applied to the Weierstrass points.
pub fn transport_x5_to_x2(f: &Poly<Rational>, n: usize) -> Poly<GaussianRational> {
    let fg = f.map(GaussianRational::from_rational);
    let s = crate::decomp::sigma().inverse();
    let [a, b, c, d] = s.entries();
    let u = Poly::new(alloc::vec![b.clone(), a.clone()]);
    let v = Poly::new(alloc::vec![d.clone(), c.clone()]);
    crate::icosa::hom_eval(&fg, n, &u, &v)
}

/// True when p = c·q for a nonzero constant c.
pub fn proportional<F: Field>(p: &Poly<F>, q: &Poly<F>) -> bool {
    if p.is_zero() || q.is_zero() || p.deg() != q.deg() {
        return false;
    }
    let c = p.leading() * &q.leading().inv().expect("nonzero");
    *p == q.scale(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use proptest::prelude::*;

    #[test]
    fn classification_examples() {
        let c = classify_genus(29).unwrap();
        assert_eq!((c.case_no, c.group, c.delta), (1, AutGroup::Z2xA5, 1));
        assert!(c.multipliers.is_empty());
        let c = classify_genus(5).unwrap();
        assert_eq!((c.case_no, c.delta, c.multipliers.as_slice()), (2, 0, &[S][..]));
        let c = classify_genus(30).unwrap();
        assert_eq!((c.case_no, c.group, c.delta), (8, AutGroup::SL2_5, 0));
        assert_eq!(c.multipliers, alloc::vec![T, R, S]);
        assert_eq!(classify_genus(7), Err(FamilyError::NotInLocus(7)));
        assert_eq!(classify_genus(0), Err(FamilyError::NotInLocus(0)));
        assert_eq!(genus_for_case(1, 1), Some(29));
        assert_eq!(genus_for_case(8, 1), Some(60));
    }

    #[test]
    fn lambda_factor_shape() {
        let l = rat(7, 3);
        let f = lambda_factor_x5(&l).unwrap();
        assert_eq!(f.coeff(55), Rational::from_i64(684) - &l);
        assert_eq!(f.coeff(60), Rational::from_i64(-1));
        assert_eq!(f.coeff(0), Rational::from_i64(-1));
        assert_eq!(
            lambda_factor_x5(&Rational::from_i64(1728)),
            Err(FamilyError::DegenerateBranchValue(Rational::from_i64(1728)))
        );
        assert!(lambda_factor_x2(&Rational::from_i64(0)).is_err());
    }

    #[test]
    fn small_curves() {
        let c = curve_equation_x5(30, &[]).unwrap();
        assert_eq!(c.f.deg(), 61);
        assert_eq!(c.weierstrass_count(), 62);
        let c = curve_equation_x5(5, &[]).unwrap();
        assert_eq!(c.f, s_form());
        assert_eq!(c.weierstrass_count(), 12);
        let c = curve_equation_x5(29, &[rat(2, 1)]).unwrap();
        assert_eq!(c.f.deg(), 60);
        assert!(c.is_squarefree());
        assert_eq!(
            curve_equation_x5(59, &[rat(2, 1), rat(2, 1)]),
            Err(FamilyError::DuplicateBranchValue(rat(2, 1)))
        );
        assert!(matches!(
            curve_equation_x5(29, &[]),
            Err(FamilyError::WrongParameterCount { expected: 1, got: 0 })
        ));
    }

    #[test]
    fn degenerate_values_are_not_squarefree() {
        for l in [0, 1728] {
            let f = lambda_factor_x5_unchecked(&Rational::from_i64(l));
            assert!(!is_squarefree_rational(&f));
        }
    }

    #[test]
    fn even_model_examples() {
        let e = even_model(&Poly::<Rational>::from_i64s(&[3, 0, 2, 0, 1])).unwrap();
        assert_eq!(e.b, [3, 2, 1].map(Rational::from_i64).to_vec());
        assert!(!e.x_factor);
        let e = even_model(&Poly::<Rational>::from_i64s(&[0, 1, 0, 0, 0, 1])).unwrap();
        assert!(e.x_factor);
        assert_eq!(e.b, [1, 0, 1].map(Rational::from_i64).to_vec());
        assert_eq!(even_model(&Poly::<Rational>::from_i64s(&[1, 1, 1])), Err(FamilyError::NotEven));
        let c = curve_equation_x2(29, &[rat(5, 1)]).unwrap();
        let e = even_model(&c.f).unwrap();
        assert_eq!(e.b.len(), 31);
        assert!(!e.b[0].is_zero() && !e.b[30].is_zero());
    }

    #[test]
    fn every_case_at_smallest_one_dimensional_genus() {
        for case in 1..=8u8 {
            let g = genus_for_case(case, 1).unwrap();
            let l = [rat(3 + case as i64, 7)];
            let c5 = curve_equation_x5(g, &l).unwrap();
            assert_eq!(c5.case.case_no, case);
            assert!(c5.is_squarefree());
            assert_eq!(c5.weierstrass_count(), 2 * g + 2);
            let c2 = curve_equation_x2(g, &l).unwrap();
            assert!(c2.is_squarefree());
            assert_eq!(c2.weierstrass_count(), 2 * g + 2);
            let e = even_model(&c2.f).unwrap();
            assert_eq!(e.x_factor, case >= 5);
            assert!(proportional(&c2.f, &transport_x5_to_x2(&c5.f, 2 * g + 2)));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn random_branch_values(p in -3000i64..3000, q in 1i64..50, g in 2usize..300) {
            let l = rat(p, q);
            prop_assume!(l != rat(0, 1) && l != rat(1728, 1));
            match classify_genus(g) {
                Ok(c) => {
                    prop_assert_eq!(c.group == AutGroup::Z2xA5, g % 2 == 1);
                    if c.delta <= 1 {
                        let ls: Vec<Rational> = (0..c.delta).map(|_| l.clone()).collect();
                        let m = curve_equation_x5(g, &ls).unwrap();
                        prop_assert!(m.is_squarefree());
                        prop_assert_eq!(m.weierstrass_count(), 2 * g + 2);
                    }
                }
                Err(_) => prop_assert!(![29, 5, 15, 9, 14, 20, 24, 0].contains(&(g % 30))),
            }
        }
    }
}
