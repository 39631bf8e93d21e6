use core::fmt;

use crate::exactfield::Field;
use crate::polyring::{PolyError, RationalFunction};

use super::IcosaError;

/// x ↦ (a x + b)/(c x + d), stored in canonical projective form: the first
/// nonzero entry among a, b, c, d is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MoebiusMap<F> {
    a: F,
    b: F,
    c: F,
    d: F,
}

impl<F: Field> MoebiusMap<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Result<Self, IcosaError> {
        let det = a.clone() * &d - b.clone() * &c;
        if det.is_zero() {
            return Err(IcosaError::SingularMatrix);
        }
        Ok(Self::canonical(a, b, c, d))
    }

    fn canonical(a: F, b: F, c: F, d: F) -> Self {
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find(|v| !v.is_zero())
            .expect("invertible matrix has a nonzero entry")
            .inv()
            .expect("nonzero");
        MoebiusMap {
            a: a * &lead,
            b: b * &lead,
            c: c * &lead,
            d: d * &lead,
        }
    }

    pub fn identity() -> Self {
        MoebiusMap {
            a: F::one(),
            b: F::zero(),
            c: F::zero(),
            d: F::one(),
        }
    }

    /// x ↦ k·x.
    pub fn scaling(k: F) -> Result<Self, IcosaError> {
        Self::new(k, F::zero(), F::zero(), F::one())
    }

    pub fn entries(&self) -> [&F; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> F {
        self.a.clone() * &self.d - self.b.clone() * &self.c
    }

    pub fn trace(&self) -> F {
        self.a.clone() + &self.d
    }

    /// Matrix product self · other, i.e. the map x ↦ self(other(x)).
    pub fn compose(&self, other: &Self) -> Self {
        let a = self.a.clone() * &other.a + self.b.clone() * &other.c;
        let b = self.a.clone() * &other.b + self.b.clone() * &other.d;
        let c = self.c.clone() * &other.a + self.d.clone() * &other.c;
        let d = self.c.clone() * &other.b + self.d.clone() * &other.d;
        Self::canonical(a, b, c, d)
    }

    pub fn inverse(&self) -> Self {
        Self::canonical(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Order in PGL2, searching up to `bound`.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_identity() {
                return Some(k);
            }
            p = p.compose(self);
        }
        None
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut p = Self::identity();
        for _ in 0..e {
            p = p.compose(self);
        }
        p
    }

    /// Image of a point, `None` for the point at infinity.
    pub fn apply(&self, x: &F) -> Option<F> {
        let num = self.a.clone() * x + &self.b;
        let den = self.c.clone() * x + &self.d;
        num.checked_div(&den)
    }

    pub fn to_rational_function(&self) -> RationalFunction<F> {
        RationalFunction::mobius(
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        )
        .expect("invertible")
    }

    /// Coefficient field change.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> MoebiusMap<G> {
        MoebiusMap::canonical(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }

    /// f ∘ self for a rational function f, without a gcd: a Möbius
    /// substitution keeps a reduced fraction reduced.
    pub fn pull_back(&self, f: &RationalFunction<F>) -> Result<RationalFunction<F>, PolyError> {
        let n = f.degree();
        let num = crate::polyring::Poly::new(alloc::vec![self.b.clone(), self.a.clone()]);
        let den = crate::polyring::Poly::new(alloc::vec![self.d.clone(), self.c.clone()]);
        let p = hom_eval(f.num(), n, &num, &den);
        let q = hom_eval(f.den(), n, &num, &den);
        let l = q.leading().inv().ok_or(PolyError::ZeroPolynomial)?;
        RationalFunction::from_reduced_parts(p.scale(&l), q.scale(&l))
    }
}

/// Σ pᵢ U^i V^(n−i) by homogeneous Horner.
pub(crate) fn hom_eval<F: Field>(
    p: &crate::polyring::Poly<F>,
    n: usize,
    u: &crate::polyring::Poly<F>,
    v: &crate::polyring::Poly<F>,
) -> crate::polyring::Poly<F> {
    use crate::polyring::Poly;
    let mut v_pows = alloc::vec::Vec::with_capacity(n + 1);
    v_pows.push(Poly::one());
    for k in 1..=n {
        let next = &v_pows[k - 1] * v;
        v_pows.push(next);
    }
    let mut acc = Poly::zero();
    for i in (0..=n).rev() {
        acc = &(&acc * u) + &v_pows[n - i].scale(&p.coeff(i));
    }
    acc
}

impl<F: fmt::Debug> fmt::Debug for MoebiusMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{:?}, {:?}], [{:?}, {:?}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rational};
    use crate::polyring::Poly;

    type M = MoebiusMap<Rational>;

    fn m(a: i64, b: i64, c: i64, d: i64) -> M {
        M::new(rat(a, 1), rat(b, 1), rat(c, 1), rat(d, 1)).unwrap()
    }

    #[test]
    fn projective_equality() {
        assert_eq!(m(2, 4, 6, 10), m(1, 2, 3, 5));
        assert_eq!(m(0, -1, 1, 0), m(0, 2, -2, 0));
        assert!(M::new(rat(1, 1), rat(2, 1), rat(2, 1), rat(4, 1)).is_err());
    }

    #[test]
    fn orders_and_inverse() {
        let inv = m(0, -1, 1, 0);
        assert_eq!(inv.order(10), Some(2));
        let t = m(1, 1, 0, 1);
        assert_eq!(t.order(10), None);
        assert!(t.compose(&t.inverse()).is_identity());
        assert_eq!(m(0, -1, 1, 1).order(10), Some(3));
    }

    #[test]
    fn pull_back_matches_compose() {
        let f = RationalFunction::new(Poly::from_i64s(&[1, 0, 3]), Poly::from_i64s(&[0, 2])).unwrap();
        let g = m(2, -1, 1, 3);
        let a = g.pull_back(&f).unwrap();
        let b = f.compose(&g.to_rational_function()).unwrap();
        assert_eq!(a, b);
    }
}
