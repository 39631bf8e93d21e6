//! Resultants by the subresultant pseudo-remainder sequence.
//!
//! Sign convention: Res(p, q) is the determinant of the Sylvester matrix with
//! the rows of p first, so Res(p, q) = lc(p)^deg q · Π q(α) over the roots α of p.

use alloc::vec;
use alloc::vec::Vec;

use crate::exactfield::Field;

use super::linalg::{determinant, Matrix};
use super::{Poly, PolyError};

pub fn resultant<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<F, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    let mut sign_neg = false;
    if a.deg() < b.deg() {
        core::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign_neg = true;
        }
    }
    if b.deg() == 0 {
        let r = b.leading().pow(a.deg() as u64);
        return Ok(if sign_neg { -r } else { r });
    }
    let mut g = F::one();
    let mut h = F::one();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = a.pseudo_rem(&b)?;
        a = b;
        if r.is_zero() {
            return Ok(F::zero());
        }
        let divisor = g.clone() * h.pow(delta);
        b = r.scale(&divisor.inv().expect("subresultant divisor is nonzero"));
        g = a.leading();
        // h ← h^(1−δ)·g^δ
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .checked_div(&h.pow(delta - 1))
                .expect("h is nonzero")
        };
        if b.deg() == 0 {
            let da = a.deg() as u64;
            let lb = b.leading().pow(da);
            let res = if da == 0 {
                lb * h
            } else {
                lb.checked_div(&h.pow(da - 1)).expect("h is nonzero")
            };
            return Ok(if sign_neg { -res } else { res });
        }
    }
}

/// The Sylvester matrix of p (rows first) and q.
pub fn sylvester_matrix<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Matrix<F> {
    let m = p.deg();
    let n = q.deg();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![F::zero(); size];
        for (k, c) in p.coeffs().iter().enumerate() {
            row[i + m - k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![F::zero(); size];
        for (k, c) in q.coeffs().iter().enumerate() {
            row[i + n - k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant as a Sylvester determinant. Slow; kept as a cross-check.
pub fn sylvester_resultant<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<F, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.deg() + q.deg() == 0 {
        return Ok(F::one());
    }
    Ok(determinant(&sylvester_matrix(p, q)))
}

/// Discriminant with the usual sign: (−1)^(n(n−1)/2)·Res(p, p′)/lc(p).
pub fn discriminant<F: Field>(p: &Poly<F>) -> Result<F, PolyError> {
    let n = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if n == 0 {
        return Ok(F::one());
    }
    if n == 1 {
        return Ok(F::one());
    }
    let r = resultant(p, &p.derivative())?;
    let r = r.checked_div(&p.leading()).expect("nonzero leading coefficient");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rational};
    use crate::polyring::Poly;
    use proptest::prelude::*;

    type P = Poly<Rational>;

    fn arb(max_deg: usize) -> impl Strategy<Value = P> {
        proptest::collection::vec(-9i64..10, 1..=max_deg + 1)
            .prop_map(|v| P::from_i64s(&v))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    #[test]
    fn examples() {
        let a = rat(3, 1);
        let b = rat(-5, 2);
        let p = P::new(vec![-a.clone(), rat(1, 1)]);
        let q = P::new(vec![-b.clone(), rat(1, 1)]);
        // Π (α − β) with α the root of p
        assert_eq!(resultant(&p, &q).unwrap(), a - b);
        assert_eq!(
            resultant(&P::from_i64s(&[-1, 0, 1]), &P::from_i64s(&[-2, 1])).unwrap(),
            rat(3, 1)
        );
        let p = P::from_i64s(&[3, -1, 0, 2]);
        assert_eq!(resultant(&p, &p).unwrap(), rat(0, 1));
        assert!(resultant(&P::zero(), &p).is_err());
        assert_eq!(discriminant(&P::from_i64s(&[1, 1, 1])).unwrap(), rat(-3, 1));
        assert_eq!(discriminant(&P::from_i64s(&[-1, 0, 0, 1])).unwrap(), rat(-27, 1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]

        #[test]
        fn agrees_with_sylvester(p in arb(8), q in arb(8)) {
            prop_assert_eq!(resultant(&p, &q).unwrap(), sylvester_resultant(&p, &q).unwrap());
        }

        #[test]
        fn multiplicative(p in arb(4), q in arb(4), r in arb(4)) {
            let lhs = resultant(&(&p * &q), &r).unwrap();
            prop_assert_eq!(lhs, resultant(&p, &r).unwrap() * resultant(&q, &r).unwrap());
        }
    }
}
