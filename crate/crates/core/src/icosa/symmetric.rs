use alloc::vec;
use alloc::vec::Vec;

use crate::exactfield::Field;
use crate::polyring::linalg::nullspace;
use crate::polyring::{Poly, RationalFunction};

use super::{MoebiusGroup, MoebiusMap};

/// The polynomials N₀..N_n with ∏_g ((c x + d) T − (a x + b)) = Σ N_k T^k.
/// In particular N_n = ∏ (c x + d).
fn orbit_product<F: Field>(g: &MoebiusGroup<F>) -> Vec<Poly<F>> {
    let mut rows: Vec<Poly<F>> = vec![Poly::one()];
    for m in g.elements() {
        let [a, b, c, d] = m.entries();
        let lin_den = Poly::new(vec![d.clone(), c.clone()]);
        let lin_num = Poly::new(vec![b.clone(), a.clone()]);
        let mut next = vec![Poly::zero(); rows.len() + 1];
        for (k, r) in rows.iter().enumerate() {
            next[k + 1] = &next[k + 1] + &(r * &lin_den);
            next[k] = &next[k] - &(r * &lin_num);
        }
        rows = next;
    }
    rows
}

/// Cancels common linear factors of num/den, using that every root of den is
/// −d/c for some group element.
fn reduce_against<F: Field>(
    g: &MoebiusGroup<F>,
    mut num: Poly<F>,
    mut den: Poly<F>,
) -> RationalFunction<F> {
    if num.is_zero() {
        return RationalFunction::constant(F::zero());
    }
    let mut roots: Vec<F> = Vec::new();
    for m in g.elements() {
        let [_, _, c, d] = m.entries();
        if let Some(ci) = c.inv() {
            let r = -(d.clone() * &ci);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    for r in roots {
        let lin = Poly::new(vec![-r.clone(), F::one()]);
        while den.eval(&r).is_zero() && num.eval(&r).is_zero() {
            num = num.div_exact(&lin).expect("root");
            den = den.div_exact(&lin).expect("root");
        }
    }
    let l = den.leading().inv().expect("nonzero");
    RationalFunction::from_reduced_parts(num.scale(&l), den.scale(&l)).expect("nonzero")
}

/// All elementary symmetric functions s₁..s_n of the group elements viewed as
/// rational functions of x.
pub fn symmetric_generators<F: Field>(g: &MoebiusGroup<F>) -> Vec<RationalFunction<F>> {
    let rows = orbit_product(g);
    let n = g.order();
    let den = rows[n].clone();
    (1..=n)
        .map(|i| {
            let mut num = rows[n - i].clone();
            if i % 2 == 1 {
                num = -&num;
            }
            if num.is_zero() {
                return RationalFunction::constant(F::zero());
            }
            // constant when num is proportional to den
            if num.deg() == den.deg() {
                let c = num.leading() * &den.leading().inv().expect("nonzero");
                if num == den.scale(&c) {
                    return RationalFunction::constant(c);
                }
            }
            reduce_against(g, num, den.clone())
        })
        .collect()
}

/// The i-th elementary symmetric function, 1 ≤ i ≤ |G|.
pub fn symmetric_generator<F: Field>(g: &MoebiusGroup<F>, i: usize) -> Option<RationalFunction<F>> {
    if i == 0 || i > g.order() {
        return None;
    }
    symmetric_generators(g).into_iter().nth(i - 1)
}

/// A Möbius map M with s = M ∘ f, found from the linear system
/// s_num·(c f_num + d f_den) = s_den·(a f_num + b f_den).
pub fn moebius_relation<F: Field>(
    s: &RationalFunction<F>,
    f: &RationalFunction<F>,
) -> Option<MoebiusMap<F>> {
    let cols = [
        -&(s.den() * f.num()),
        -&(s.den() * f.den()),
        s.num() * f.num(),
        s.num() * f.den(),
    ];
    let rows = cols.iter().map(|p| p.deg()).max().unwrap_or(0) + 1;
    let m: Vec<Vec<F>> = (0..rows)
        .map(|k| cols.iter().map(|p| p.coeff(k)).collect())
        .collect();
    let ns = nullspace(&m);
    if ns.len() != 1 {
        return None;
    }
    let v = &ns[0];
    MoebiusMap::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()).ok()
}

/// f ∘ g = f for each g in a generating set of G.
pub fn orbit_invariance_check<F: Field>(g: &MoebiusGroup<F>, f: &RationalFunction<F>) -> bool {
    g.generating_set()
        .iter()
        .all(|m| m.pull_back(f).map(|h| &h == f).unwrap_or(false))
}

/// f ∘ g = f checked element by element.
pub fn orbit_invariance_check_full<F: Field>(g: &MoebiusGroup<F>, f: &RationalFunction<F>) -> bool {
    g.elements()
        .iter()
        .all(|m| m.pull_back(f).map(|h| &h == f).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, AlgebraicNumber, Rational};
    use crate::icosa::{build_a5, phi};
    use num_traits::One;

    type M = MoebiusMap<Rational>;

    fn pm_group() -> MoebiusGroup<Rational> {
        let neg = M::scaling(rat(-1, 1)).unwrap();
        MoebiusGroup::generate(&[neg], 2).unwrap()
    }

    #[test]
    fn small_groups() {
        let triv = MoebiusGroup::<Rational>::generate(&[], 1).unwrap();
        assert_eq!(symmetric_generator(&triv, 1).unwrap(), RationalFunction::identity());
        let g = pm_group();
        let s = symmetric_generators(&g);
        assert_eq!(s[0], RationalFunction::constant(rat(0, 1)));
        assert_eq!(s[1], RationalFunction::from_poly(Poly::from_i64s(&[0, 0, -1])));
        let x2 = RationalFunction::from_poly(Poly::from_i64s(&[0, 0, 1]));
        assert!(orbit_invariance_check(&g, &x2));
        assert!(!orbit_invariance_check(&g, &RationalFunction::identity()));
    }

    #[test]
    fn relation_on_small_case() {
        let x2 = RationalFunction::from_poly(Poly::from_i64s(&[0, 0, 1]));
        let m = M::new(rat(2, 1), rat(1, 1), rat(1, 1), rat(3, 1)).unwrap();
        let s = m.to_rational_function().compose(&x2).unwrap();
        assert_eq!(moebius_relation(&s, &x2), Some(m));
    }

    #[test]
    fn a5_invariance() {
        let g = build_a5();
        let p = phi().map(AlgebraicNumber::from_rational);
        assert!(orbit_invariance_check_full(&g, &p));
        let x5 = RationalFunction::from_poly(Poly::monomial(AlgebraicNumber::one(), 5));
        assert!(!orbit_invariance_check(&g, &x5));
    }

    #[test]
    fn a5_first_generator_is_phi() {
        let g = build_a5();
        let p = phi().map(AlgebraicNumber::from_rational);
        let all = symmetric_generators(&g);
        let first = all.iter().find(|s| !s.is_constant()).unwrap();
        assert_eq!(first.degree(), 60);
        assert!(moebius_relation(first, &p).is_some());
    }
}
