//! JSON shapes for exact values. Rationals are always strings `"p/q"` or
//! `"p"`, never floats.

use a5curve::exactfield::{format_rational, parse_rational};
use a5curve::polyring::{Poly, Poly2, RationalFunction};
use a5curve::{AlgebraicNumber, Field, GaussianRational, QuadraticElement, Rational};
use serde::{Deserialize, Serialize};

/// One exact number. The variants have disjoint JSON shapes, so untagged
/// decoding is unambiguous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Rational(String),
    Gaussian { re: String, im: String },
    Quadratic { a: String, b: String, d: String },
    /// Coordinates in the power basis 1, ζ, …, ζ¹⁵ of Q(ζ₆₀).
    Cyclotomic(Vec<String>),
}

pub trait Encode {
    fn encode(&self) -> Num;
}

impl Encode for Rational {
    fn encode(&self) -> Num {
        Num::Rational(format_rational(self))
    }
}

impl Encode for GaussianRational {
    fn encode(&self) -> Num {
        Num::Gaussian {
            re: format_rational(&self.re),
            im: format_rational(&self.im),
        }
    }
}

impl Encode for QuadraticElement {
    fn encode(&self) -> Num {
        Num::Quadratic {
            a: format_rational(self.a()),
            b: format_rational(self.b()),
            d: self.d().to_string(),
        }
    }
}

impl Encode for AlgebraicNumber {
    fn encode(&self) -> Num {
        Num::Cyclotomic(self.coeffs().iter().map(format_rational).collect())
    }
}

pub fn rat(q: &Rational) -> String {
    format_rational(q)
}

pub fn parse_rat(s: &str) -> Option<Rational> {
    parse_rational(s)
}

/// Coefficients listed from x⁰ upward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub var: String,
    pub coeffs: Vec<Num>,
}

impl PolyDoc {
    pub fn new<F: Field + Encode>(var: &str, p: &Poly<F>) -> Self {
        PolyDoc {
            var: var.to_string(),
            coeffs: p.coeffs().iter().map(Encode::encode).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunDoc {
    pub num: PolyDoc,
    pub den: PolyDoc,
}

impl RatFunDoc {
    pub fn new<F: Field + Encode>(var: &str, r: &RationalFunction<F>) -> Self {
        RatFunDoc {
            num: PolyDoc::new(var, r.num()),
            den: PolyDoc::new(var, r.den()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term2 {
    pub i1: usize,
    pub i2: usize,
    pub c: String,
}

/// Σ c·i₁^a·i₂^b, nonzero terms only, ordered by (a, b).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly2Doc {
    pub degree_i1: usize,
    pub degree_i2: usize,
    pub terms: Vec<Term2>,
}

impl Poly2Doc {
    pub fn new(f: &Poly2<Rational>) -> Self {
        Poly2Doc {
            degree_i1: f.degree_x(),
            degree_i2: f.degree_y(),
            terms: f
                .terms()
                .into_iter()
                .map(|(i1, i2, c)| Term2 { i1, i2, c: rat(&c) })
                .collect(),
        }
    }

    pub fn coeff(&self, i1: usize, i2: usize) -> Option<&str> {
        self.terms
            .iter()
            .find(|t| t.i1 == i1 && t.i2 == i2)
            .map(|t| t.c.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use a5curve::exactfield::rat as q;

    #[test]
    fn shapes_round_trip() {
        let vals = vec![
            q(-7, 3).encode(),
            GaussianRational::from_ints(1, -2).encode(),
            QuadraticElement::new(q(1, 2), q(3, 1), 5.into()).unwrap().encode(),
            AlgebraicNumber::i().encode(),
        ];
        let s = serde_json::to_string(&vals).unwrap();
        let back: Vec<Num> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vals);
        assert!(s.starts_with("[\"-7/3\",{\"re\":\"1\",\"im\":\"-2\"}"));
    }
}
