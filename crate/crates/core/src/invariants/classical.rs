use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactfield::{Field, Rational};
use crate::polyring::{BinaryForm, Poly};

use super::transvectant::{transvectant, transvectant_q, ScaledForm};
use super::InvariantError;

/// I₂, I₄, I₆, I₆* and the absolute invariants built from them.
#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantSet<F> {
    pub I2: F,
    pub I4: F,
    pub I6: F,
    /// Undefined below degree 20.
    pub I6s: Option<F>,
    pub i1: Option<F>,
    pub i2: Option<F>,
    pub i3: Option<F>,
    pub i4: Option<F>,
}

impl<F: Field> InvariantSet<F> {
    #[allow(non_snake_case)]
    fn from_parts(I2: F, I4: F, I6: F, I6s: Option<F>) -> Self {
        let (i1, i2, i3) = match I2.inv() {
            Some(t) => {
                let t2 = t.clone() * &t;
                let t3 = t2.clone() * &t;
                (
                    Some(I4.clone() * &t2),
                    Some(I6.clone() * &t3),
                    I6s.as_ref().map(|v| v.clone() * &t3),
                )
            }
            None => (None, None, None),
        };
        let i4 = I4
            .inv()
            .map(|t| I6.clone() * &I6 * &t * &t * &t);
        InvariantSet {
            I2,
            I4,
            I6,
            I6s,
            i1,
            i2,
            i3,
            i4,
        }
    }

    /// I₂ = 0: the absolute invariants i₁, i₂, i₃ have no value.
    pub fn normalization_undefined(&self) -> bool {
        self.I2.is_zero()
    }
}

/// The binary form of degree 2g+2 attached to y² = f(x); an odd-degree f
/// acquires the root Y = 0 at infinity.
pub fn form_of_curve<F: Field>(f: &Poly<F>, genus: usize) -> BinaryForm<F> {
    BinaryForm::from_poly(f, 2 * genus + 2)
}

fn check_degree(d: usize) -> Result<(), InvariantError> {
    if d < 12 {
        return Err(InvariantError::DegreeTooSmall(d));
    }
    Ok(())
}

/// Classical invariants over any field.
pub fn classical_invariants<F: Field>(form: &BinaryForm<F>) -> Result<InvariantSet<F>, InvariantError> {
    let d = form.degree();
    check_degree(d)?;
    let s = |f: &BinaryForm<F>| f.as_scalar().expect("degree 0");
    let i2 = s(&transvectant(form, form, d)?);
    let j12 = transvectant(form, form, d - 6)?;
    let i4 = s(&transvectant(&j12, &j12, 12)?);
    let a = transvectant(form, &j12, 12)?;
    let i6 = s(&transvectant(&a, &a, d - 12)?);
    let i6s = if d >= 20 {
        let j20 = transvectant(form, form, d - 10)?;
        let b = transvectant(form, &j20, 20)?;
        Some(s(&transvectant(&b, &b, d - 20)?))
    } else {
        None
    };
    Ok(InvariantSet::from_parts(i2, i4, i6, i6s))
}

/// Classical invariants of a rational form through the integer engine.
pub fn classical_invariants_q(form: &BinaryForm<Rational>) -> Result<InvariantSet<Rational>, InvariantError> {
    let d = form.degree();
    check_degree(d)?;
    let f = ScaledForm::from_form(form);
    let s = |x: ScaledForm| x.scalar().expect("degree 0");
    let i2 = s(transvectant_q(&f, &f, d)?);
    let j12 = transvectant_q(&f, &f, d - 6)?;
    let i4 = s(transvectant_q(&j12, &j12, 12)?);
    let a = transvectant_q(&f, &j12, 12)?;
    let i6 = s(transvectant_q(&a, &a, d - 12)?);
    let i6s = if d >= 20 {
        let j20 = transvectant_q(&f, &f, d - 10)?;
        let b = transvectant_q(&f, &j20, 20)?;
        Some(s(transvectant_q(&b, &b, d - 20)?))
    } else {
        None
    };
    Ok(InvariantSet::from_parts(i2, i4, i6, i6s))
}

/// (J_i, J_i)^i with J_i = (F, F)^(d − i/2), for each requested i ≡ 0 mod 4.
pub fn covariant_self_invariants(
    form: &BinaryForm<Rational>,
    orders: &[usize],
) -> Result<Vec<(usize, Rational)>, InvariantError> {
    let d = form.degree();
    let f = ScaledForm::from_form(form);
    orders
        .iter()
        .map(|&i| {
            if i % 2 == 1 || i / 2 > d {
                return Err(InvariantError::DegreeTooSmall(d));
            }
            let j = transvectant_q(&f, &f, d - i / 2)?;
            let v = transvectant_q(&j, &j, i)?.scalar().expect("degree 0");
            Ok((i, v))
        })
        .collect()
}

/// The vanishing pattern (J_i, J_i)^i = 0 for i = 4, 8, 16, 28.
pub fn covariant_vanishing(form: &BinaryForm<Rational>) -> Result<bool, InvariantError> {
    Ok(covariant_self_invariants(form, &[4, 8, 16, 28])?
        .iter()
        .all(|(_, v)| v.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use crate::families::{curve_equation_x5, genus_for_case};

    #[test]
    fn fermat_form() {
        // X^d + Y^d: only k = 0 and k = d contribute to (F,F)^d, each d!²
        for d in [12usize, 20, 24] {
            let mut c = alloc::vec![Rational::zero(); d + 1];
            c[0] = rat(1, 1);
            c[d] = rat(1, 1);
            let f = BinaryForm::new(c);
            let a = classical_invariants(&f).unwrap();
            let b = classical_invariants_q(&f).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.I2, rat(2, 1));
        }
    }

    #[test]
    fn degree_guard() {
        let f = BinaryForm::new(alloc::vec![rat(1, 1); 7]);
        assert_eq!(classical_invariants_q(&f), Err(InvariantError::DegreeTooSmall(6)));
    }

    #[test]
    fn case1_covariant_vanishing() {
        let g = genus_for_case(1, 1).unwrap();
        let c = curve_equation_x5(g, &[rat(2, 1)]).unwrap();
        let f = form_of_curve(&c.f, g);
        assert!(covariant_vanishing(&f).unwrap());
        let mut p = c.f.clone().into_coeffs();
        p[7] += rat(1, 1);
        p[30] += rat(-2, 3);
        let bad = form_of_curve(&Poly::new(p), g);
        let v = covariant_self_invariants(&bad, &[4, 8, 16, 28]).unwrap();
        assert!(v.iter().all(|(_, x)| !x.is_zero()), "{v:?}");
    }

    use proptest::prelude::*;

    fn substitute(f: &BinaryForm<Rational>, a: i64, b: i64, c: i64, d: i64) -> BinaryForm<Rational> {
        let u = Poly::from_i64s(&[b, a]);
        let v = Poly::from_i64s(&[d, c]);
        let n = f.degree();
        BinaryForm::from_poly(&crate::icosa::hom_eval(&f.to_poly(), n, &u, &v), n)
    }

    fn absolute(s: &InvariantSet<Rational>) -> [Option<Rational>; 4] {
        [s.i1.clone(), s.i2.clone(), s.i3.clone(), s.i4.clone()]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn unimodular_invariance(c in proptest::collection::vec(-5i64..6, 21), a in -3i64..4, b in -3i64..4, k in -2i64..3) {
            let f = BinaryForm::new(c.iter().map(|&v| Rational::from_i64(v)).collect());
            prop_assume!(!f.coeff(0).is_zero() || !f.coeff(20).is_zero());
            // (1 a; 0 1)(1+kb b; k 1)
            let (m11, m12, m21, m22) = (1 + k * b + a * k, b + a, k, 1);
            prop_assert_eq!(m11 * m22 - m12 * m21, 1);
            let g = substitute(&f, m11, m12, m21, m22);
            let s = classical_invariants_q(&f).unwrap();
            let t = classical_invariants_q(&g).unwrap();
            prop_assert_eq!(&s.I2, &t.I2);
            prop_assert_eq!(&s.I6s, &t.I6s);
            prop_assert_eq!(absolute(&s), absolute(&t));
        }

        #[test]
        fn scaling_invariance(c in proptest::collection::vec(-5i64..6, 21), p in 1i64..5, q in 1i64..5, neg in any::<bool>()) {
            let f = BinaryForm::new(c.iter().map(|&v| Rational::from_i64(v)).collect());
            let t = rat(if neg { -p } else { p }, q);
            // x ↦ t·x: the coefficient of X^(d−k)Y^k picks up t^(d−k)
            let g = BinaryForm::new(f.coeffs().iter().enumerate().map(|(k, v)| v * Field::pow(&t, (20 - k) as u64)).collect());
            let s = classical_invariants_q(&f).unwrap();
            let h = classical_invariants_q(&g).unwrap();
            prop_assert_eq!(absolute(&s), absolute(&h));
        }
    }
}
