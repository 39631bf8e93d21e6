use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::decomp::{r_bar, s_bar, t_bar};
use crate::exactfield::{Field, GaussianRational, QuadraticElement, Rational};
use crate::families::{classify_genus, even_model, genus_for_case, AutGroup, Multiplier};
use crate::invariants::{check_group_relation, DihedralInvariants, GroupRelation};
use crate::polyring::Poly;

use super::{LociError, SingularFiber};

/// y² = f(x) with coefficients in the field generated by the uᵢ.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalModel<F> {
    pub genus: usize,
    pub group: AutGroup,
    pub f: Poly<F>,
}

/// Coefficients of x^{2j}, j = 0..d, of the even part of the model:
/// 2, u_{d−1}, u_{d−2}, …, u₁, u₁.
pub fn model_coefficients<T: Clone>(u: &[T], two: T) -> Vec<T> {
    let mut b = Vec::with_capacity(u.len() + 2);
    b.push(two);
    b.extend(u.iter().rev().cloned());
    if let Some(u1) = u.first() {
        b.push(u1.clone());
    }
    b
}

fn expected_group(g: usize, d: usize) -> Option<AutGroup> {
    if g % 2 == 1 && d == g + 1 {
        Some(AutGroup::Z2xA5)
    } else if g % 2 == 0 && d == g {
        Some(AutGroup::SL2_5)
    } else {
        None
    }
}

/// The model y² = u₁x^{2g+2} + u₁x^{2g} + u₂x^{2g−2} + ⋯ + u_g x² + 2 (odd g)
/// or y² = x(u₁x^{2g} + u₁x^{2g−2} + ⋯ + u_{g−1}x² + 2) (even g).
pub fn rational_model<F: Field>(u: &DihedralInvariants<F>, g: usize) -> Result<RationalModel<F>, LociError> {
    let group = expected_group(g, u.d).ok_or(LociError::NotInLocus)?;
    let rel = check_group_relation(u);
    let ok = matches!(
        (group, rel),
        (AutGroup::Z2xA5, GroupRelation::Z2xA5) | (AutGroup::SL2_5, GroupRelation::SL2_5)
    );
    if !ok {
        return Err(LociError::NotInLocus);
    }
    let b = model_coefficients(&u.u, F::from_i64(2));
    let shift = usize::from(group == AutGroup::SL2_5);
    let mut c = alloc::vec![F::zero(); 2 * u.d + 1 + shift];
    for (j, v) in b.into_iter().enumerate() {
        c[2 * j + shift] = v;
    }
    Ok(RationalModel {
        genus: g,
        group,
        f: Poly::new(c),
    })
}

type Q2 = QuadraticElement;

/// Elements of Q(√d)(i), as re + i·im.
#[derive(Clone, Debug, PartialEq)]
struct Ki {
    re: Q2,
    im: Q2,
}

impl Ki {
    fn add(&self, o: &Self) -> Self {
        Ki {
            re: self.re.add(&o.re).expect("one radicand"),
            im: self.im.add(&o.im).expect("one radicand"),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let m = |a: &Q2, b: &Q2| a.mul(b).expect("one radicand");
        Ki {
            re: m(&self.re, &o.re).sub(&m(&self.im, &o.im)).expect("one radicand"),
            im: m(&self.re, &o.im).add(&m(&self.im, &o.re)).expect("one radicand"),
        }
    }

    fn inv(&self) -> Option<Self> {
        let n = self
            .re
            .mul(&self.re)
            .and_then(|a| a.add(&self.im.mul(&self.im)?))
            .ok()?
            .inv()
            .ok()?;
        Some(Ki {
            re: self.re.mul(&n).ok()?,
            im: self.im.neg().mul(&n).ok()?,
        })
    }

    fn pow(&self, mut e: usize) -> Self {
        let mut acc = Ki {
            re: Q2::from_rational(Rational::one(), self.re.d().clone()),
            im: Q2::from_rational(Rational::zero(), self.re.d().clone()),
        };
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// The root-free dihedral invariants over Q(√d)(i).
fn dihedral_ki(b: &[Ki]) -> Option<Vec<Ki>> {
    let d = b.len() - 1;
    let b0i = b[0].inv()?;
    let k = b[0].mul(&b[d].inv()?);
    let r = |j: usize| b[j].mul(&b0i);
    let powers = |x: &Ki| {
        let mut v = alloc::vec![x.pow(0)];
        for e in 1..d {
            let next = v[e - 1].mul(x);
            v.push(next);
        }
        v
    };
    let (p1, pd1, pk) = (powers(&r(1)), powers(&r(d - 1)), powers(&k));
    Some(
        (1..d)
            .map(|i| {
                let e = d - i;
                let t1 = p1[e].mul(&r(i)).mul(&k);
                let t2 = pd1[e].mul(&r(d - i)).mul(&pk[e]);
                t1.add(&t2)
            })
            .collect(),
    )
}

/// A model over Q(√d) at a singular fibre of the δ = 1 family of a case.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularModel {
    pub d: BigInt,
    pub genus: usize,
    pub group: AutGroup,
    /// u₁..u_{d−1} at the root of the fibre.
    pub u: Vec<QuadraticElement>,
    /// Coefficients of f, index = power of x.
    pub f: Vec<QuadraticElement>,
}

fn gaussian_parts(p: &Poly<GaussianRational>) -> Result<Vec<GaussianRational>, LociError> {
    Ok(even_model(p)?.b)
}

pub fn singular_model(case_no: u8, fiber: &SingularFiber) -> Result<SingularModel, LociError> {
    let g = genus_for_case(case_no, 1).ok_or(LociError::BadCase(case_no))?;
    let case = classify_genus(g)?;
    let l = fiber.root()?;
    let dd = l.d().clone();
    let mut m = Poly::<GaussianRational>::one();
    for f in &case.multipliers {
        m = &m * &match f {
            Multiplier::R => r_bar(),
            Multiplier::S => s_bar(),
            Multiplier::T => t_bar(),
        };
    }
    // Λ̄ M̄ = 64R̄³M̄ − λS̄⁵M̄, both parts even or both x times even
    let a = gaussian_parts(&(&r_bar().pow(3).scale(&GaussianRational::from_i64(64)) * &m))?;
    let s = gaussian_parts(&(&s_bar().pow(5) * &m))?;
    let lift = |q: &Rational| Q2::from_rational(q.clone(), dd.clone());
    let b: Vec<Ki> = a
        .iter()
        .zip(s.iter())
        .map(|(x, y)| {
            let re = lift(&x.re).sub(&l.mul(&lift(&y.re))?)?;
            let im = lift(&x.im).sub(&l.mul(&lift(&y.im))?)?;
            Ok(Ki { re, im })
        })
        .collect::<Result<_, LociError>>()?;
    let u_ki = dihedral_ki(&b).ok_or_else(|| {
        LociError::UnexpectedFactorStructure(format!("{}: degenerate end coefficients", fiber.kind))
    })?;
    if u_ki.iter().any(|v| !v.im.is_zero()) {
        return Err(LociError::UnexpectedFactorStructure(format!(
            "{}: dihedral invariants not in Q(sqrt d)",
            fiber.kind
        )));
    }
    let u: Vec<Q2> = u_ki.into_iter().map(|v| v.re).collect();
    let dlen = u.len() + 1;
    // group relation over Q(√d)
    let pow = |x: &Q2, e: usize| {
        let k = Ki {
            re: x.clone(),
            im: Q2::from_rational(Rational::zero(), dd.clone()),
        };
        k.pow(e).re
    };
    let lhs = u[0].mul(&lift(&Rational::from_integer(BigInt::one() << ((dlen - 2) / 2))))?;
    let rhs = pow(&u[dlen - 2], dlen / 2);
    let holds = match case.group {
        AutGroup::Z2xA5 => lhs.sub(&rhs)?.is_zero(),
        AutGroup::SL2_5 => lhs.add(&rhs)?.is_zero(),
    };
    if !holds || expected_group(g, dlen) != Some(case.group) {
        return Err(LociError::NotInLocus);
    }
    let coeffs = model_coefficients(&u, lift(&Rational::from_i64(2)));
    let shift = usize::from(case.group == AutGroup::SL2_5);
    let mut f = alloc::vec![lift(&Rational::zero()); 2 * dlen + 1 + shift];
    for (j, v) in coeffs.into_iter().enumerate() {
        f[2 * j + shift] = v;
    }
    Ok(SingularModel {
        d: dd,
        genus: g,
        group: case.group,
        u,
        f,
    })
}

impl SingularModel {
    /// uᵢ of the model itself, 1 ≤ i < d. Every i reproduces `u`; large i
    /// are cheap since the powers involved are small.
    pub fn model_invariant(&self, i: usize) -> Option<QuadraticElement> {
        let shift = usize::from(self.group == AutGroup::SL2_5);
        let b: Vec<&Q2> = self.f.iter().skip(shift).step_by(2).collect();
        let d = b.len() - 1;
        if i == 0 || i >= d {
            return None;
        }
        let zero = Q2::from_rational(Rational::zero(), self.d.clone());
        let ki = |x: Q2| Ki { re: x, im: zero.clone() };
        let b0i = b[0].inv().ok()?;
        let r = |j: usize| b[j].mul(&b0i).ok().map(ki);
        let k = ki(b[0].div(b[d]).ok()?);
        let e = d - i;
        let t1 = r(1)?.pow(e).mul(&r(i)?).mul(&k);
        let t2 = r(d - 1)?.pow(e).mul(&r(d - i)?).mul(&k.pow(e));
        Some(t1.add(&t2).re)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use crate::families::{curve_equation_x2, curve_equation_x5};
    use crate::invariants::{classical_invariants_q, dihedral_invariants, form_of_curve};
    use crate::loci::{build_locus, singular_fibers};

    fn u_of(g: usize, l: &Rational) -> DihedralInvariants<GaussianRational> {
        let c = curve_equation_x2(g, &[l.clone()]).unwrap();
        dihedral_invariants(&even_model(&c.f).unwrap().b).unwrap()
    }

    #[test]
    fn round_trip() {
        for (g, l) in [(29, rat(2, 1)), (29, rat(-7, 3)), (44, rat(5, 2))] {
            let u = u_of(g, &l);
            let m = rational_model(&u, g).unwrap();
            assert_eq!(m.f.deg(), 2 * g + 1 + g % 2);
            assert!(m.f.coeffs().iter().all(|c| c.im.is_zero()));
            let back = dihedral_invariants(&even_model(&m.f).unwrap().b).unwrap();
            assert_eq!(back, u);
            assert_eq!(check_group_relation(&back), check_group_relation(&u));
            // absolute invariants agree with the x⁵-model curve
            let orig = curve_equation_x5(g, &[l.clone()]).unwrap();
            let fq = m.f.map(|c| c.re.clone());
            let a = classical_invariants_q(&form_of_curve(&orig.f, g)).unwrap();
            let b = classical_invariants_q(&form_of_curve(&fq, g)).unwrap();
            assert_eq!((a.i1, a.i2, a.i3), (b.i1, b.i2, b.i3));
        }
        let bad = DihedralInvariants {
            d: 30,
            u: alloc::vec![rat(1, 1); 29],
        };
        assert_eq!(rational_model(&bad, 29), Err(LociError::NotInLocus));
    }

    #[test]
    fn case1_singular_models() {
        let l = build_locus(1).unwrap();
        for fiber in singular_fibers(&l).unwrap().iter() {
            let m = singular_model(1, fiber).unwrap();
            assert_eq!(m.f.len(), 61);
            assert!(m.u.iter().any(|v| !v.is_rational()));
            for i in [29, 28, 27, 25] {
                assert_eq!(m.model_invariant(i).as_ref(), Some(&m.u[i - 1]));
            }
        }
    }
}
