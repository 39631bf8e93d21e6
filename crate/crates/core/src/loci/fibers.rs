use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactfield::{Field, QuadraticElement, Rational};
use crate::polyring::resultant::resultant;
use crate::polyring::{interpolate, Poly, RationalFunction};

use super::{sample_points, LociError, LocusCurve};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberKind {
    /// Two λ with the same (i₁, i₂).
    Collision,
    /// Common zeros of i₁ and i₂: the point (0, 0).
    ZeroLocus,
    /// Zeros of I₂: the point at infinity.
    InfinityLocus,
}

impl core::fmt::Display for FiberKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            FiberKind::Collision => "collision",
            FiberKind::ZeroLocus => "zero_locus",
            FiberKind::InfinityLocus => "infinity_locus",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingularFiber {
    pub kind: FiberKind,
    /// Primitive integer quadratic in λ with positive leading coefficient.
    pub q: Poly<Rational>,
    pub disc: BigInt,
}

impl SingularFiber {
    fn new(kind: FiberKind, q: &Poly<Rational>) -> Result<Self, LociError> {
        if q.degree() != Some(2) {
            return Err(LociError::UnexpectedFactorStructure(format!(
                "{kind}: expected a quadratic, found degree {}",
                q.deg()
            )));
        }
        let q = q.primitive();
        let c = q.coeffs();
        let disc = (&c[1] * &c[1] - Rational::from_i64(4) * &c[0] * &c[2]).to_integer();
        Ok(SingularFiber { kind, q, disc })
    }

    /// The root (−B + √disc)/2A in Q(√d).
    pub fn root(&self) -> Result<QuadraticElement, LociError> {
        let c = self.q.coeffs();
        let two_a = &c[2] * Rational::from_i64(2);
        let l = QuadraticElement::new(-&c[1] / &two_a, Rational::one() / &two_a, self.disc.clone())?;
        if l.is_rational() {
            return Err(LociError::UnexpectedFactorStructure(format!(
                "{}: quadratic splits over Q",
                self.kind
            )));
        }
        Ok(l)
    }
}

fn squarefree(p: &Poly<Rational>) -> Poly<Rational> {
    let g = p.gcd(&p.derivative());
    p.div_exact(&g).expect("gcd divides")
}

fn eval_q(p: &Poly<Rational>, x: &QuadraticElement) -> Result<QuadraticElement, LociError> {
    let d = x.d().clone();
    let mut acc = QuadraticElement::from_rational(Rational::zero(), d.clone());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x)?.add(&QuadraticElement::from_rational(c.clone(), d.clone()))?;
    }
    Ok(acc)
}

/// r(x) for x in a quadratic field.
pub fn fiber_value(
    r: &RationalFunction<Rational>,
    x: &QuadraticElement,
) -> Result<QuadraticElement, LociError> {
    Ok(eval_q(r.num(), x)?.div(&eval_q(r.den(), x)?)?)
}

/// (n(l)d(μ) − n(μ)d(l))/(l − μ) as a polynomial in μ.
fn difference_quotient(r: &RationalFunction<Rational>, l: &Rational) -> Poly<Rational> {
    let (n, d) = (r.num(), r.den());
    let p = &d.scale(&n.eval(l)) - &n.scale(&d.eval(l));
    let lin = Poly::new(alloc::vec![l.clone(), -Rational::one()]);
    p.div_exact(&lin).expect("vanishes at μ = l")
}

fn strip(mut p: Poly<Rational>, f: &Poly<Rational>) -> Poly<Rational> {
    while let Some(q) = p.div_exact(f) {
        p = q;
    }
    p
}

/// Res_μ(N₁(λ, μ), N₂(λ, μ)) by evaluation at integer λ and interpolation.
fn collision_resultant(locus: &LocusCurve) -> Result<Poly<Rational>, LociError> {
    let deg = |r: &RationalFunction<Rational>| r.num().deg().max(r.den().deg()) - 1;
    let (e1, e2) = (deg(&locus.i1), deg(&locus.i2));
    let bound = 2 * e1 * e2;
    let ls = sample_points(bound + 6, |l| {
        difference_quotient(&locus.i1, l).degree() == Some(e1)
            && difference_quotient(&locus.i2, l).degree() == Some(e2)
    });
    let pts = ls
        .into_iter()
        .map(|l| {
            let v = resultant(
                &difference_quotient(&locus.i1, &l),
                &difference_quotient(&locus.i2, &l),
            )?;
            Ok((l, v))
        })
        .collect::<Result<Vec<_>, LociError>>()?;
    Ok(interpolate(&pts, bound)?)
}

/// The three singular fibres, in the order collision, zero locus, infinity
/// locus.
pub fn singular_fibers(locus: &LocusCurve) -> Result<[SingularFiber; 3], LociError> {
    let zero_q = squarefree(&locus.i1.num().gcd(locus.i2.num()));
    let zero = SingularFiber::new(FiberKind::ZeroLocus, &zero_q)?;
    let inf_q = squarefree(&locus.invariants.I2);
    let inf = SingularFiber::new(FiberKind::InfinityLocus, &inf_q)?;
    let res = collision_resultant(locus)?;
    if res.is_zero() {
        return Err(LociError::EliminationDegenerate);
    }
    let rest = strip(strip(res, &zero.q), &inf.q);
    let coll = SingularFiber::new(FiberKind::Collision, &squarefree(&rest))?;

    // the defining property of each fibre, checked at a root
    for fiber in [&coll, &zero, &inf] {
        let l = fiber.root()?;
        let ok = match fiber.kind {
            FiberKind::Collision => {
                fiber_value(&locus.i1, &l)?.is_rational() && fiber_value(&locus.i2, &l)?.is_rational()
            }
            FiberKind::ZeroLocus => {
                fiber_value(&locus.i1, &l)?.is_zero() && fiber_value(&locus.i2, &l)?.is_zero()
            }
            FiberKind::InfinityLocus => eval_q(&locus.invariants.I2, &l)?.is_zero(),
        };
        if !ok {
            return Err(LociError::UnexpectedFactorStructure(format!(
                "{}: property fails at the root",
                fiber.kind
            )));
        }
    }
    Ok([coll, zero, inf])
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldOfModuli {
    /// Squarefree d with the field of moduli Q(√d).
    pub d: BigInt,
    /// False when d could not be fully factored.
    pub certified: bool,
    /// i₃ at the root of the fibre, or I₆*/I₆ at the infinity locus where
    /// I₂ = 0.
    pub i3: QuadraticElement,
}

pub fn field_of_moduli_at(fiber: &SingularFiber, locus: &LocusCurve) -> Result<FieldOfModuli, LociError> {
    let l = fiber.root()?;
    let r = match fiber.kind {
        FiberKind::InfinityLocus => locus.invariants.i6_ratio()?,
        _ => locus.invariants.i3()?,
    };
    let i3 = fiber_value(&r, &l)?;
    if i3.is_rational() {
        return Err(LociError::RationalI3);
    }
    Ok(FieldOfModuli {
        d: l.d().clone(),
        certified: l.certified(),
        i3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loci::build_locus;

    fn q(c: [&str; 3]) -> Poly<Rational> {
        let v: Vec<Rational> = c.iter().rev().map(|s| Rational::from_integer(s.parse().unwrap())).collect();
        Poly::new(v)
    }

    #[test]
    fn case1_fibres() {
        let l = build_locus(1).unwrap();
        let f = singular_fibers(&l).unwrap();
        assert_eq!(
            f[0].q,
            q([
                "452144735218242469277017",
                "-482828029389149632341153000",
                "-8593063274412012696185238840000"
            ])
        );
        assert_eq!(f[1].q, q(["791091587", "-610337874000", "-15159961555740000"]));
        assert_eq!(f[2].q, q(["872196589", "-931385301000", "11586093746490000"]));
        let d: Vec<BigInt> = f.iter().map(|x| field_of_moduli_at(x, &l).unwrap().d).collect();
        let want: Vec<BigInt> = ["6594752841114090745134757", "127067509222", "-27468005002203037701"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(d, want);
    }
}
