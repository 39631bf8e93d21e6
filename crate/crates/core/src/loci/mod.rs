//! One-dimensional loci: the relation F(i₁, i₂) = 0, its singular fibres,
//! fields of moduli at the singular points, λ from a moduli point, and
//! models over the field of moduli.

mod fibers;
mod model;

pub use fibers::{
    field_of_moduli_at, fiber_value, singular_fibers, FiberKind, FieldOfModuli, SingularFiber,
};
pub use model::{rational_model, singular_model, model_coefficients, RationalModel, SingularModel};

use alloc::string::String;
use alloc::vec::Vec;

use crate::exactfield::{Field, FieldError, Rational};
use crate::families::FamilyError;
use crate::invariants::{InvariantError, LambdaInvariants};
use crate::polyring::resultant::resultant;
use crate::polyring::{interpolate_grid, Poly, Poly2, PolyError, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LociError {
    #[error("resultant vanishes identically")]
    EliminationDegenerate,
    #[error("unexpected factor structure: {0}")]
    UnexpectedFactorStructure(String),
    #[error("i3 is rational at the fibre")]
    RationalI3,
    #[error("point is singular on the locus: two values of lambda")]
    SingularPoint,
    #[error("point does not lie on the locus")]
    NotOnLocus,
    #[error("dihedral invariants satisfy neither group relation")]
    NotInLocus,
    #[error("case number {0} is not in 1..=8")]
    BadCase(u8),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The δ = 1 locus of a case in the (i₁, i₂)-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct LocusCurve {
    pub case_no: u8,
    pub genus: usize,
    pub invariants: LambdaInvariants,
    pub i1: RationalFunction<Rational>,
    pub i2: RationalFunction<Rational>,
    /// Σ c[i][j] i₁^i i₂^j with coprime integer coefficients.
    pub f: Poly2<Rational>,
}

/// Integer points 1, −1, 2, −2, … accepted by `keep`, `n` of them.
pub(crate) fn sample_points(n: usize, mut keep: impl FnMut(&Rational) -> bool) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n);
    let mut k = 1i64;
    while out.len() < n {
        for v in [k, -k] {
            let r = Rational::from_i64(v);
            if out.len() < n && keep(&r) {
                out.push(r);
            }
        }
        k += 1;
    }
    out
}

fn degree(r: &RationalFunction<Rational>) -> usize {
    r.num().deg().max(r.den().deg())
}

/// numer − t·denom, keeping its formal degree.
fn fibre_poly(r: &RationalFunction<Rational>, t: &Rational) -> Poly<Rational> {
    r.num() - &r.den().scale(t)
}

fn keeps_degree(r: &RationalFunction<Rational>, t: &Rational) -> bool {
    fibre_poly(r, t).degree() == Some(degree(r))
}

/// Res_λ(numer(i₁) − a·denom(i₁), numer(i₂) − b·denom(i₂)) by evaluation on
/// a grid and interpolation.
pub fn eliminate(
    i1: &RationalFunction<Rational>,
    i2: &RationalFunction<Rational>,
) -> Result<Poly2<Rational>, LociError> {
    let (e1, e2) = (degree(i1), degree(i2));
    // deg_a ≤ deg_λ of the second polynomial and vice versa; two spare lines
    // each way check the bounds.
    let xs = sample_points(e2 + 3, |a| keeps_degree(i1, a));
    let ys = sample_points(e1 + 3, |b| keeps_degree(i2, b));
    let polys_b: Vec<Poly<Rational>> = ys.iter().map(|b| fibre_poly(i2, b)).collect();
    let mut values = Vec::with_capacity(xs.len());
    for a in &xs {
        let pa = fibre_poly(i1, a);
        let row = polys_b
            .iter()
            .map(|pb| resultant(&pa, pb))
            .collect::<Result<Vec<_>, _>>()?;
        values.push(row);
    }
    let f = interpolate_grid(&xs, &ys, &values, e2, e1)?;
    if f.is_zero() {
        return Err(LociError::EliminationDegenerate);
    }
    Ok(primitive2(&f))
}

fn primitive2(f: &Poly2<Rational>) -> Poly2<Rational> {
    let mut out = alloc::vec![alloc::vec![Rational::from_i64(0); f.degree_y() + 1]; f.degree_x() + 1];
    for (i, j, c) in f.primitive_integer() {
        out[i][j] = Rational::from_integer(c);
    }
    Poly2::new(out)
}

pub fn build_locus(case_no: u8) -> Result<LocusCurve, LociError> {
    if !(1..=8).contains(&case_no) {
        return Err(LociError::BadCase(case_no));
    }
    let invariants = LambdaInvariants::compute(case_no)?;
    build_locus_from(invariants)
}

/// As [`build_locus`], from already interpolated invariants.
pub fn build_locus_from(invariants: LambdaInvariants) -> Result<LocusCurve, LociError> {
    let i1 = invariants.i1()?;
    let i2 = invariants.i2()?;
    let f = eliminate(&i1, &i2)?;
    Ok(LocusCurve {
        case_no: invariants.case_no,
        genus: invariants.genus,
        invariants,
        i1,
        i2,
        f,
    })
}

impl LocusCurve {
    /// F(i₁(λ), i₂(λ)).
    pub fn residual_at(&self, l: &Rational) -> Option<Rational> {
        Some(self.f.eval(&self.i1.eval(l)?, &self.i2.eval(l)?))
    }

    /// The equation satisfied by (κ₁i₁, κ₂i₂), made integral and primitive.
    pub fn rescaled(&self, k1: &Rational, k2: &Rational) -> Option<Poly2<Rational>> {
        Some(primitive2(&self.f.rescale(&k1.inv()?, &k2.inv()?)))
    }
}

/// The λ with (i₁(λ), i₂(λ)) = (a, b), from the gcd of the two fibre
/// polynomials.
pub fn solve_lambda(a: &Rational, b: &Rational, locus: &LocusCurve) -> Result<Rational, LociError> {
    let g = fibre_poly(&locus.i1, a).gcd(&fibre_poly(&locus.i2, b));
    match g.degree() {
        Some(1) => {
            let c = g.coeffs();
            Ok(-c[0].clone() * c[1].inv().expect("degree 1"))
        }
        Some(0) | None => Err(LociError::NotOnLocus),
        Some(_) => Err(LociError::SingularPoint),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use num_bigint::BigInt;

    #[test]
    fn case1_locus() {
        let l = build_locus(1).unwrap();
        assert_eq!((l.f.degree_x(), l.f.degree_y()), (6, 4));
        let lead: BigInt = "20104543529222176607891970551365425625".parse().unwrap();
        assert_eq!(l.f.coeff(0, 4), Rational::from_integer(lead));
        for v in [rat(5, 1), rat(-3, 2), rat(11, 7)] {
            assert_eq!(l.residual_at(&v), Some(rat(0, 1)));
        }
        // (0, 0) is on the curve and singular
        assert_eq!(l.f.coeff(0, 0), rat(0, 1));
        assert_eq!(l.f.coeff(1, 0), rat(0, 1));
        assert_eq!(l.f.coeff(0, 1), rat(0, 1));
        for v in [rat(7, 1), rat(-3, 2)] {
            let (a, b) = (l.i1.eval(&v).unwrap(), l.i2.eval(&v).unwrap());
            assert_eq!(solve_lambda(&a, &b, &l), Ok(v));
        }
        assert_eq!(solve_lambda(&rat(0, 1), &rat(0, 1), &l), Err(LociError::SingularPoint));
        assert_eq!(solve_lambda(&rat(1, 1), &rat(5, 1), &l), Err(LociError::NotOnLocus));
    }
}
