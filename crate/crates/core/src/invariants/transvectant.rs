use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactfield::{Field, Rational};
use crate::polyring::BinaryForm;

use super::InvariantError;

fn falling(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for t in 0..k {
        r *= n - t;
    }
    r
}

fn factorial(n: usize) -> BigInt {
    falling(n, n)
}

fn binom(n: usize, k: usize) -> BigInt {
    falling(n, k) / factorial(k)
}

/// Multipliers of ∂^(i+j)/∂X^i∂Y^j on a form of degree m: the term at index
/// t (X^(m−t)Y^t) lands at index t−j with factor (m−t)_i (t)_j.
fn derivative_factors(m: usize, i: usize, j: usize) -> Vec<BigInt> {
    (j..=m - i).map(|t| falling(m - t, i) * falling(t, j)).collect()
}

/// (m−r)!(n−r)!/(m!n!).
fn normalization(m: usize, n: usize, r: usize) -> Rational {
    Rational::new(
        factorial(m - r) * factorial(n - r),
        factorial(m) * factorial(n),
    )
}

/// The r-th transvectant with the factorial normalization
/// ((m−r)!(n−r)!/(m!n!)) Σ (−1)^k C(r,k) ∂ʳf/∂X^(r−k)∂Y^k · ∂ʳh/∂X^k∂Y^(r−k).
pub fn transvectant<F: Field>(
    f: &BinaryForm<F>,
    h: &BinaryForm<F>,
    r: usize,
) -> Result<BinaryForm<F>, InvariantError> {
    let (m, n) = (f.degree(), h.degree());
    if r > m.min(n) {
        return Err(InvariantError::OrderTooLarge { r, m, n });
    }
    let mut out = vec![F::zero(); m + n - 2 * r + 1];
    for k in 0..=r {
        let df: Vec<F> = derivative_factors(m, r - k, k)
            .iter()
            .enumerate()
            .map(|(t, c)| f.coeff(t + k).mul_int(c))
            .collect();
        let dh: Vec<F> = derivative_factors(n, k, r - k)
            .iter()
            .enumerate()
            .map(|(t, c)| h.coeff(t + r - k).mul_int(c))
            .collect();
        let mut w = binom(r, k);
        if k % 2 == 1 {
            w = -w;
        }
        for (a, x) in df.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let xw = x.mul_int(&w);
            for (b, y) in dh.iter().enumerate() {
                if !y.is_zero() {
                    out[a + b] += &(xw.clone() * y);
                }
            }
        }
    }
    let c = F::from_rational(&normalization(m, n, r));
    Ok(BinaryForm::new(out.into_iter().map(|v| v * &c).collect()))
}

/// A rational binary form stored as scale · (primitive integer vector).
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledForm {
    scale: Rational,
    v: Vec<BigInt>,
}

impl ScaledForm {
    pub fn from_form(f: &BinaryForm<Rational>) -> Self {
        let den = f
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let v: Vec<BigInt> = f
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::normalized(Rational::new(BigInt::one(), den), v)
    }

    fn normalized(scale: Rational, mut v: Vec<BigInt>) -> Self {
        let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ScaledForm {
                scale: Rational::zero(),
                v,
            };
        }
        if !g.is_one() {
            for c in v.iter_mut() {
                *c = &*c / &g;
            }
        }
        ScaledForm {
            scale: scale * Rational::from_integer(g.abs()),
            v,
        }
    }

    pub fn degree(&self) -> usize {
        self.v.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn to_form(&self) -> BinaryForm<Rational> {
        BinaryForm::new(
            self.v
                .iter()
                .map(|c| Rational::from_integer(c.clone()) * &self.scale)
                .collect(),
        )
    }

    /// The value of a degree-0 form.
    pub fn scalar(&self) -> Option<Rational> {
        (self.v.len() == 1).then(|| Rational::from_integer(self.v[0].clone()) * &self.scale)
    }
}

/// Integer-coefficient version of [`transvectant`]; contents are kept apart
/// so the big-integer products stay as small as possible.
pub fn transvectant_q(f: &ScaledForm, h: &ScaledForm, r: usize) -> Result<ScaledForm, InvariantError> {
    let (m, n) = (f.degree(), h.degree());
    if r > m.min(n) {
        return Err(InvariantError::OrderTooLarge { r, m, n });
    }
    let mut out = vec![BigInt::zero(); m + n - 2 * r + 1];
    if f.is_zero() || h.is_zero() {
        return Ok(ScaledForm::normalized(Rational::zero(), out));
    }
    let same = core::ptr::eq(f, h) || f == h;
    for k in 0..=r {
        // (f,f)^r: the k and r−k terms agree up to (−1)^r, so odd r vanishes
        // and even r needs only half the sum.
        if same && (r % 2 == 1 || k > r / 2) {
            continue;
        }
        let df: Vec<BigInt> = derivative_factors(m, r - k, k)
            .into_iter()
            .enumerate()
            .map(|(t, c)| c * &f.v[t + k])
            .collect();
        let dh: Vec<BigInt> = derivative_factors(n, k, r - k)
            .into_iter()
            .enumerate()
            .map(|(t, c)| c * &h.v[t + r - k])
            .collect();
        let mut w = binom(r, k);
        if same && 2 * k != r {
            w *= 2;
        }
        if k % 2 == 1 {
            w = -w;
        }
        for (a, x) in df.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let xw = x * &w;
            for (b, y) in dh.iter().enumerate() {
                if !y.is_zero() {
                    out[a + b] += &xw * y;
                }
            }
        }
    }
    let scale = normalization(m, n, r) * &f.scale * &h.scale;
    Ok(ScaledForm::normalized(scale, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use proptest::prelude::*;

    fn form(c: &[i64]) -> BinaryForm<Rational> {
        BinaryForm::new(c.iter().map(|&v| Rational::from_i64(v)).collect())
    }

    #[test]
    fn quadratic_discriminant() {
        // aX² + bXY + cY²: (f,f)² = (4ac − b²)/2
        let (a, b, c) = (3, 5, -2);
        let f = form(&[a, b, c]);
        let t = transvectant(&f, &f, 2).unwrap();
        assert_eq!(t.as_scalar().unwrap(), rat(4 * a * c - b * b, 2));
        let s = ScaledForm::from_form(&f);
        assert_eq!(transvectant_q(&s, &s, 2).unwrap().scalar().unwrap(), rat(4 * a * c - b * b, 2));
    }

    #[test]
    fn zeroth_is_product_and_order_check() {
        let f = form(&[1, 2]);
        let h = form(&[3, 0, 1]);
        assert_eq!(transvectant(&f, &h, 0).unwrap(), form(&[3, 6, 1, 2]));
        assert!(matches!(transvectant(&f, &h, 2), Err(InvariantError::OrderTooLarge { .. })));
    }

    fn arb_form(max_deg: usize) -> impl Strategy<Value = BinaryForm<Rational>> {
        proptest::collection::vec(-9i64..10, 1..=max_deg + 1).prop_map(|c| form(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn engines_agree(f in arb_form(8), h in arb_form(8), r in 0usize..9) {
            prop_assume!(r <= f.degree().min(h.degree()));
            let a = transvectant(&f, &h, r).unwrap();
            let b = transvectant_q(&ScaledForm::from_form(&f), &ScaledForm::from_form(&h), r).unwrap();
            prop_assert_eq!(a.degree(), f.degree() + h.degree() - 2 * r);
            prop_assert_eq!(&b.to_form(), &a);
            let ff = transvectant_q(&ScaledForm::from_form(&f), &ScaledForm::from_form(&f), r).unwrap();
            prop_assert_eq!(ff.to_form(), transvectant(&f, &f, r).unwrap());
            if r % 2 == 1 {
                prop_assert!(transvectant(&f, &f, r).unwrap().is_zero());
            }
        }

        #[test]
        fn bilinear(
            (f, g) in (1usize..8).prop_flat_map(|n| {
                let c = proptest::collection::vec(-9i64..10, n);
                (c.clone(), c).prop_map(|(a, b)| (form(&a), form(&b)))
            }),
            h in arb_form(6),
            r in 0usize..7,
        ) {
            prop_assume!(r <= f.degree().min(h.degree()));
            let fg = BinaryForm::new(f.coeffs().iter().zip(g.coeffs()).map(|(a, b)| a * rat(2, 1) + b).collect());
            let lhs = transvectant(&fg, &h, r).unwrap();
            let a = transvectant(&f, &h, r).unwrap();
            let b = transvectant(&g, &h, r).unwrap();
            let rhs = BinaryForm::new(a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x * rat(2, 1) + y).collect());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
