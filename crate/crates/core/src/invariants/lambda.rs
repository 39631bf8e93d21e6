use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactfield::{Field, Rational};
use crate::families::{classify_genus, genus_for_case, lambda_factor_x5_unchecked, Multiplier};
use crate::icosa::{r_form, s_form, t_form};
use crate::polyring::{interpolate, BinaryForm, Poly, RationalFunction};

use super::{classical_invariants_q, form_of_curve, InvariantError, InvariantSet};

/// I₂, I₄, I₆, I₆* of the one-parameter family of a case, as polynomials
/// in the branch value λ.
#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaInvariants {
    pub case_no: u8,
    pub genus: usize,
    pub I2: Poly<Rational>,
    pub I4: Poly<Rational>,
    pub I6: Poly<Rational>,
    pub I6s: Poly<Rational>,
}

/// Number of λ samples; the largest degree bound is 6, so 18 of them are
/// consistency checks.
pub const SAMPLE_COUNT: usize = 25;

/// λ = 1, 2, …, 25.
pub fn sample_lambdas() -> Vec<Rational> {
    (1..=SAMPLE_COUNT as i64).map(Rational::from_i64).collect()
}

/// The degree 2g+2 form of the δ = 1 curve of a case in the x⁵-model. No
/// check on λ: the invariants are polynomial in it.
pub fn case_form(case_no: u8, l: &Rational) -> Result<BinaryForm<Rational>, InvariantError> {
    let g = genus_for_case(case_no, 1).ok_or(InvariantError::NotConstantOnLocus)?;
    let case = classify_genus(g)?;
    let mut f = lambda_factor_x5_unchecked(l);
    for m in &case.multipliers {
        f = &f * &match m {
            Multiplier::R => r_form(),
            Multiplier::S => s_form(),
            Multiplier::T => t_form(),
        };
    }
    Ok(form_of_curve(&f, g))
}

/// Invariants of the case curve at one λ.
pub fn case_invariants_at(case_no: u8, l: &Rational) -> Result<InvariantSet<Rational>, InvariantError> {
    classical_invariants_q(&case_form(case_no, l)?)
}

impl LambdaInvariants {
    /// Interpolates from (λ, invariants) samples. Each Iₛ has degree ≤ s in
    /// the coefficients of the form, which are linear in λ.
    pub fn from_samples(
        case_no: u8,
        samples: &[(Rational, InvariantSet<Rational>)],
    ) -> Result<Self, InvariantError> {
        let genus = genus_for_case(case_no, 1).ok_or(InvariantError::NotConstantOnLocus)?;
        let fit = |pick: &dyn Fn(&InvariantSet<Rational>) -> Rational, deg: usize| {
            let pts: Vec<(Rational, Rational)> =
                samples.iter().map(|(l, s)| (l.clone(), pick(s))).collect();
            interpolate(&pts, deg)
        };
        Ok(LambdaInvariants {
            case_no,
            genus,
            I2: fit(&|s| s.I2.clone(), 2)?,
            I4: fit(&|s| s.I4.clone(), 4)?,
            I6: fit(&|s| s.I6.clone(), 6)?,
            I6s: fit(&|s| s.I6s.clone().expect("degree ≥ 20"), 6)?,
        })
    }

    pub fn compute(case_no: u8) -> Result<Self, InvariantError> {
        let samples = sample_lambdas()
            .into_iter()
            .map(|l| case_invariants_at(case_no, &l).map(|s| (l, s)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_samples(case_no, &samples)
    }

    fn ratio(num: &Poly<Rational>, den: &Poly<Rational>, e: u32) -> Result<RationalFunction<Rational>, InvariantError> {
        Ok(RationalFunction::new(num.clone(), den.pow(e))?)
    }

    /// I₄/I₂².
    pub fn i1(&self) -> Result<RationalFunction<Rational>, InvariantError> {
        Self::ratio(&self.I4, &self.I2, 2)
    }

    /// I₆/I₂³.
    pub fn i2(&self) -> Result<RationalFunction<Rational>, InvariantError> {
        Self::ratio(&self.I6, &self.I2, 3)
    }

    /// I₆*/I₂³.
    pub fn i3(&self) -> Result<RationalFunction<Rational>, InvariantError> {
        Self::ratio(&self.I6s, &self.I2, 3)
    }

    /// I₆²/I₄³.
    pub fn i4(&self) -> Result<RationalFunction<Rational>, InvariantError> {
        Ok(RationalFunction::new(self.I6.pow(2), self.I4.pow(3))?)
    }

    /// I₆*/I₆, the substitute for i₃ where I₂ vanishes.
    pub fn i6_ratio(&self) -> Result<RationalFunction<Rational>, InvariantError> {
        Self::ratio(&self.I6s, &self.I6, 1)
    }

    /// All four polynomials evaluated at λ.
    pub fn at(&self, l: &Rational) -> [Rational; 4] {
        [self.I2.eval(l), self.I4.eval(l), self.I6.eval(l), self.I6s.eval(l)]
    }
}

/// κ with reference = κ · computed at λ, or `None` if the computed value vanishes.
pub fn kappa_at(
    reference: &RationalFunction<Rational>,
    computed: &RationalFunction<Rational>,
    l: &Rational,
) -> Option<Rational> {
    let c = computed.eval(l)?;
    if c.is_zero() {
        return None;
    }
    Some(reference.eval(l)? * c.inv()?)
}

/// Whether κ takes one value at every sample point.
pub fn kappa_constant(
    reference: &RationalFunction<Rational>,
    computed: &RationalFunction<Rational>,
    ls: &[Rational],
) -> Option<Rational> {
    let k = kappa_at(reference, computed, ls.first()?)?;
    ls[1..]
        .iter()
        .all(|l| kappa_at(reference, computed, l).as_ref() == Some(&k))
        .then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn z() -> Poly<Rational> {
        Poly::from_i64s(&[-15159961555740000, -610337874000, 791091587])
    }

    fn dd() -> Poly<Rational> {
        Poly::from_i64s(&[11586093746490000, -931385301000, 872196589])
    }

    #[test]
    fn case1_reference_absolute_invariants() {
        let li = LambdaInvariants::compute(1).unwrap();
        assert_eq!(li.I2.deg(), 2);
        let zz = z();
        // i₁ = (1948908/7397845567) Z²/D²
        let p1 = RationalFunction::new(
            zz.pow(2).scale(&rat(1948908, 7397845567)),
            dd().pow(2),
        )
        .unwrap();
        let lin = Poly::from_i64s(&[-42335695500, 79290599]);
        let c2 = Rational::new(4947228.into(), 1083437009726901515i64.into());
        let p2 = RationalFunction::new((&lin.pow(2) * &zz.pow(2)).scale(&c2), dd().pow(3)).unwrap();
        let ls: Vec<Rational> = [2, 5, -3, 11, 17, 40].iter().map(|&v| rat(v, 7)).collect();
        assert_eq!(kappa_constant(&p1, &li.i1().unwrap(), &ls), Some(rat(1, 1)));
        assert_eq!(kappa_constant(&p2, &li.i2().unwrap(), &ls), Some(rat(1, 1)));
        assert_eq!(li.i1().unwrap(), p1);
        // direct evaluation off the sample grid
        let l = rat(-13, 3);
        let s = case_invariants_at(1, &l).unwrap();
        assert_eq!(li.at(&l), [s.I2, s.I4, s.I6, s.I6s.unwrap()]);
    }
}
