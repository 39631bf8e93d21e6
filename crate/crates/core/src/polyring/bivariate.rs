use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactfield::{Field, Rational};

use super::Poly;

/// Dense bivariate polynomial Σ c[i][j] x^i y^j.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly2<F> {
    rows: Vec<Vec<F>>,
}

impl<F: Field> Poly2<F> {
    pub fn new(rows: Vec<Vec<F>>) -> Self {
        let mut p = Poly2 { rows };
        p.trim();
        p
    }

    fn trim(&mut self) {
        for r in self.rows.iter_mut() {
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> F {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn degree_x(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn degree_y(&self) -> usize {
        self.rows.iter().map(|r| r.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Nonzero terms as (i, j, c).
    pub fn terms(&self) -> Vec<(usize, usize, F)> {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        let mut acc = F::zero();
        for r in self.rows.iter().rev() {
            let inner = Poly::new(r.clone()).eval(y);
            acc = acc * x + inner;
        }
        acc
    }

    /// Specialization in x, leaving a polynomial in y.
    pub fn eval_x(&self, x: &F) -> Poly<F> {
        let mut acc = Poly::zero();
        for r in self.rows.iter().rev() {
            acc = &acc.scale(x) + &Poly::new(r.clone());
        }
        acc
    }

    /// Substitutes x ↦ a·x, y ↦ b·y.
    pub fn rescale(&self, a: &F, b: &F) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let ai = a.pow(i as u64);
                r.iter()
                    .enumerate()
                    .map(|(j, c)| c.clone() * &ai * b.pow(j as u64))
                    .collect()
            })
            .collect();
        Self::new(rows)
    }
}

impl Poly2<Rational> {
    /// Primitive integer form with a positive coefficient at the highest
    /// (i, j) in lexicographic order.
    pub fn primitive_integer(&self) -> Vec<(usize, usize, BigInt)> {
        let terms = self.terms();
        let mut den = BigInt::one();
        for (_, _, c) in &terms {
            den = den.lcm(c.denom());
        }
        let ints: Vec<(usize, usize, BigInt)> = terms
            .into_iter()
            .map(|(i, j, c)| {
                let v = c.numer() * (&den / c.denom());
                (i, j, v)
            })
            .collect();
        let mut g = BigInt::zero();
        for (_, _, v) in &ints {
            g = g.gcd(v);
        }
        if ints.last().is_some_and(|(_, _, v)| v.is_negative()) {
            g = -g;
        }
        if g.is_zero() {
            return Vec::new();
        }
        ints.into_iter().map(|(i, j, v)| (i, j, v / &g)).collect()
    }
}
