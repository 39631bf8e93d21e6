use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::decomp::{r_bar, s_bar, t_bar};
use crate::exactfield::{AlgebraicNumber, Field, GaussianRational};
use crate::families::{classify_genus, AutGroup, Multiplier};
use crate::polyring::linalg::solve;
use crate::polyring::Poly;

use super::InvariantError;

/// u₁..u_{d−1} of an even polynomial Σ bⱼ x^{2j}, j = 0..d.
#[derive(Debug, Clone, PartialEq)]
pub struct DihedralInvariants<F> {
    pub d: usize,
    /// u[i − 1] = uᵢ.
    pub u: Vec<F>,
}

impl<F: Field> DihedralInvariants<F> {
    /// uᵢ for 1 ≤ i ≤ d − 1.
    pub fn get(&self, i: usize) -> &F {
        &self.u[i - 1]
    }
}

/// uᵢ = a₁^(d−i)aᵢ + a_{d−1}^(d−i)a_{d−i} of the normalized polynomial,
/// computed without extracting the d-th root that normalizes it:
/// uᵢ = (b₁/b₀)^(d−i)(bᵢ/b₀)(b₀/b_d) + (b_{d−1}/b₀)^(d−i)(b_{d−i}/b₀)(b₀/b_d)^(d−i).
pub fn dihedral_invariants<F: Field>(b: &[F]) -> Result<DihedralInvariants<F>, InvariantError> {
    let d = b.len().checked_sub(1).ok_or(InvariantError::DegenerateLeadingOrTrailing)?;
    let b0i = b[0].inv().ok_or(InvariantError::DegenerateLeadingOrTrailing)?;
    let bdi = b[d].inv().ok_or(InvariantError::DegenerateLeadingOrTrailing)?;
    if d < 2 {
        return Err(InvariantError::DegreeTooSmall(d));
    }
    let r = |j: usize| b[j].clone() * &b0i;
    let k = b[0].clone() * &bdi;
    let (a1, ad1) = (r(1), r(d - 1));
    let u = (1..d)
        .map(|i| {
            let e = (d - i) as u64;
            let t1 = Field::pow(&a1, e) * &r(i) * &k;
            let t2 = Field::pow(&ad1, e) * &r(d - i) * &Field::pow(&k, e);
            t1 + t2
        })
        .collect();
    Ok(DihedralInvariants { d, u })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupRelation {
    Z2xA5,
    SL2_5,
    Neither,
}

/// 2^((d−2)/2)u₁ ∓ u_{d−1}^(d/2) = 0: minus for Z2⊗A5, plus for SL2(5).
pub fn check_group_relation<F: Field>(u: &DihedralInvariants<F>) -> GroupRelation {
    let d = u.d;
    if d % 2 == 1 || d < 2 {
        return GroupRelation::Neither;
    }
    let lhs = u.get(1).mul_int(&(BigInt::one() << ((d - 2) / 2)));
    let rhs = Field::pow(u.get(d - 1), (d / 2) as u64);
    if (lhs.clone() - &rhs).is_zero() {
        GroupRelation::Z2xA5
    } else if (lhs + &rhs).is_zero() {
        GroupRelation::SL2_5
    } else {
        GroupRelation::Neither
    }
}

/// For an even polynomial with coefficients c₀..c_d, finds the cube root
/// of unity ρ such that the normalized coefficients satisfy
/// a_{d−i} = ρ^i aᵢ. The normalization x ↦ t·x is only determined up to
/// roots of unity, so t² is solved from i = 1, 2 and every other i (and
/// t^d = c₀/c_d) is checked against it.
pub fn cube_root_symmetry(c: &[AlgebraicNumber]) -> Option<AlgebraicNumber> {
    let d = c.len().checked_sub(1)?;
    if d < 6 || d % 2 == 1 {
        return None;
    }
    let ratio = |i: usize| c[d - i].checked_div(&c[i]);
    let r1 = ratio(1)?;
    let r2 = ratio(2)?;
    let e3 = AlgebraicNumber::epsilon3();
    for rho in [e3.clone(), e3.clone() * &e3] {
        let tau = r2.clone() * &(rho.clone() * &r1).inv()?;
        let ok = (1..d / 2).all(|i| {
            ratio(i).map(|q| q * &Field::pow(&tau, (d / 2 - i) as u64))
                == Some(Field::pow(&rho, i as u64))
        }) && Field::pow(&tau, (d / 2) as u64) * &c[d] == c[0];
        if ok {
            return Some(rho);
        }
    }
    None
}

type G = GaussianRational;

/// Family data for turning dihedral invariants back into the elementary
/// symmetric functions of the branch values λ₁..λ_δ.
///
/// With ν = 1/(1728 − λ), each Λ̄ is proportional to P + νQ where
/// P = S̄⁵/c, Q = (64R̄³ − 1728S̄⁵)/c and c = S̄(0)⁵. The normalized even
/// polynomial of the curve is Σ_k e_k(ν) P^(δ−k)Q^k M, M the normalized
/// multiplier, so each coefficient is linear in the e_k(ν).
#[derive(Debug, Clone)]
pub struct DihedralInversion {
    pub delta: usize,
    pub d: usize,
    /// columns[k][i]: coefficient of x^{2i} in P^(δ−k)Q^k M.
    columns: Vec<Vec<G>>,
    kappa: G,
    c_ratio: G,
}

fn even_coeffs(p: &Poly<G>) -> Vec<G> {
    p.coeffs().iter().step_by(2).cloned().collect()
}

impl DihedralInversion {
    pub fn for_genus(g: usize) -> Result<Self, InvariantError> {
        let case = classify_genus(g)?;
        let delta = case.delta;
        let sb = s_bar();
        let c = Field::pow(&sb.coeff(0), 5);
        let ci = c.inv().expect("S̄(0) ≠ 0");
        let s5 = sb.pow(5);
        let p = s5.scale(&ci);
        let q = (&r_bar().pow(3).scale(&G::from_i64(64)) - &s5.scale(&G::from_i64(1728))).scale(&ci);
        let mut m = Poly::one();
        for f in &case.multipliers {
            m = &m * &match f {
                Multiplier::R => r_bar(),
                Multiplier::S => s_bar(),
                Multiplier::T => t_bar(),
            };
        }
        if case.group == AutGroup::SL2_5 {
            m = m.div_exact(&Poly::x()).expect("T̄ has the factor x");
        }
        let m0 = m.coeff(0).inv().expect("nonzero constant term");
        m = m.scale(&m0);
        let mut columns = Vec::with_capacity(delta + 1);
        for k in 0..=delta {
            let col = &(&p.pow((delta - k) as u32) * &q.pow(k as u32)) * &m;
            columns.push(even_coeffs(&col));
        }
        let d = columns[0].len() - 1;
        for col in columns.iter_mut() {
            col.resize(d + 1, G::zero());
        }
        let kappa = columns[0][d].clone();
        if kappa.is_zero() || columns[1..].iter().any(|c| !c[d].is_zero()) {
            return Err(InvariantError::NotConstantOnLocus);
        }
        // ℓ_{d−1}/ℓ₁ must not depend on the e_k
        let k0 = (0..=delta)
            .find(|&k| !columns[k][1].is_zero())
            .ok_or(InvariantError::NotConstantOnLocus)?;
        let c_ratio = columns[k0][d - 1].clone() * &columns[k0][1].inv().expect("nonzero");
        if columns
            .iter()
            .any(|col| col[d - 1] != c_ratio.clone() * &col[1])
        {
            return Err(InvariantError::NotConstantOnLocus);
        }
        Ok(DihedralInversion {
            delta,
            d,
            columns,
            kappa,
            c_ratio,
        })
    }

    /// The normalized coefficients ℓᵢ (ℓ₀ = 1) for even i, recovered from
    /// uᵢ through ℓᵢ = u_{d−i}(2κ/C)^(i/2) / (2u_{d−1}^(i/2)) with
    /// κ = ℓ_d and C = ℓ_{d−1}/ℓ₁.
    fn even_coefficients(&self, u: &DihedralInvariants<G>) -> Result<Vec<(usize, G)>, InvariantError> {
        let d = self.d;
        if u.d != d {
            return Err(InvariantError::DegreeTooSmall(u.d));
        }
        let top = u.get(d - 1).clone();
        let topi = top.inv().ok_or(InvariantError::SingularSystem)?;
        let base = self.kappa.mul_int(&BigInt::from(2)) * &self.c_ratio.inv().expect("nonzero") * &topi;
        let half = G::from_rational(&crate::exactfield::rat(1, 2));
        Ok((2..d - 1)
            .step_by(2)
            .map(|i| {
                let l = u.get(d - i).clone() * &Field::pow(&base, (i / 2) as u64) * &half;
                (i, l)
            })
            .collect())
    }

    /// s₁..s_δ of the branch values.
    pub fn symmetric_functions(&self, u: &DihedralInvariants<G>) -> Result<Vec<G>, InvariantError> {
        let delta = self.delta;
        if delta == 0 {
            return Ok(Vec::new());
        }
        let ells = self.even_coefficients(u)?;
        let m: Vec<Vec<G>> = ells
            .iter()
            .map(|(i, _)| (1..=delta).map(|k| self.columns[k][*i].clone()).collect())
            .collect();
        let rhs: Vec<G> = ells
            .iter()
            .map(|(i, l)| l.clone() - &self.columns[0][*i])
            .collect();
        let mut e = vec![G::one()];
        e.extend(solve(&m, &rhs).map_err(|_| InvariantError::SingularSystem)?);
        // ∏(X − λⱼ) = Σ e_k (X − 1728)^k / e_δ
        let shift = Poly::new(vec![G::from_i64(-1728), G::one()]);
        let mut acc = Poly::zero();
        for (k, ek) in e.iter().enumerate() {
            acc = &acc + &shift.pow(k as u32).scale(ek);
        }
        let lead = e[delta].inv().ok_or(InvariantError::SingularSystem)?;
        let monic = acc.scale(&lead);
        Ok((1..=delta)
            .map(|k| {
                let c = monic.coeff(delta - k);
                if k % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect())
    }
}

/// s₁..s_δ from the dihedral invariants of a genus-g curve in the x²-model.
pub fn symmetric_from_dihedral(
    u: &DihedralInvariants<G>,
    g: usize,
) -> Result<Vec<G>, InvariantError> {
    DihedralInversion::for_genus(g)?.symmetric_functions(u)
}
