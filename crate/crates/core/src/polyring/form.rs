use alloc::vec::Vec;

use crate::exactfield::Field;

use super::Poly;

/// Homogeneous F(X, Y) = Σ c[k] X^(d−k) Y^k of degree d.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm<F> {
    coeffs: Vec<F>,
}

impl<F: Field> BinaryForm<F> {
    /// `coeffs[k]` is the coefficient of X^(d−k) Y^k; the degree is len − 1.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    /// Degree-d homogenization Y^d f(X/Y) of a polynomial with deg f ≤ d.
    pub fn from_poly(f: &Poly<F>, d: usize) -> Self {
        assert!(f.deg() <= d, "degree exceeds the form degree");
        let coeffs = (0..=d).map(|k| f.coeff(d - k)).collect();
        BinaryForm { coeffs }
    }

    /// Dehomogenization f(x) = F(x, 1).
    pub fn to_poly(&self) -> Poly<F> {
        let d = self.degree();
        Poly::new((0..=d).map(|i| self.coeffs[d - i].clone()).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The value of a degree-zero form.
    pub fn as_scalar(&self) -> Option<F> {
        if self.coeffs.len() == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        let d = self.degree();
        let mut acc = F::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc += &(c.clone() * x.pow((d - k) as u64) * y.pow(k as u64));
        }
        acc
    }
}
