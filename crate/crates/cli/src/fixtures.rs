//! Published reference values the verification suite compares against.
//!
//! The checked-in copy is compiled in; `ICOSA_FIXTURES` points at a
//! replacement file.

use std::collections::BTreeMap;
use std::path::Path;

use a5curve::polyring::{Poly, Poly2, RationalFunction};
use a5curve::{Field, GaussianRational, Rational};
use serde::{Deserialize, Serialize};

use crate::encode::parse_rat;
use crate::CliError;

const EMBEDDED: &str = include_str!("../fixtures/reference.json");
pub const ENV_VAR: &str = "ICOSA_FIXTURES";

/// x^power coefficient `constant + lambda·λ` of −R³ − λS⁵.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LambdaTerm {
    pub power: usize,
    pub constant: String,
    pub lambda: String,
}

/// `scale · (re + im·i)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GaussianConstant {
    pub scale: String,
    pub re: String,
    pub im: String,
}

/// `scalar · (num(λ)/den(λ))^exponent`, polynomials from λ⁰ upward.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PowerForm {
    pub scalar: String,
    pub num: Vec<String>,
    pub den: Vec<String>,
    pub exponent: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DihedralForms {
    pub u1: PowerForm,
    pub u29: PowerForm,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PowerFactor {
    pub poly: Vec<String>,
    pub exponent: u32,
}

/// `scalar · ∏num / ∏den`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactoredFunction {
    pub scalar: String,
    pub num: Vec<PowerFactor>,
    pub den: Vec<PowerFactor>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AbsoluteForms {
    pub i1: FactoredFunction,
    pub i2: FactoredFunction,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocusTerm {
    pub i1: usize,
    pub i2: usize,
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Fixtures {
    pub lambda_x5: Vec<LambdaTerm>,
    pub ramification_constant: GaussianConstant,
    pub dihedral_g29: DihedralForms,
    pub case1_absolute: AbsoluteForms,
    pub case1_locus: Vec<LocusTerm>,
    /// Per case: the three fibre quadratics `[a, b, c]` for aλ² + bλ + c,
    /// ordered collision, zero locus, infinity locus.
    pub fiber_quadratics: BTreeMap<String, Vec<[String; 3]>>,
    /// Per case: the d of Q(√d) at the same three fibres.
    pub moduli_fields: BTreeMap<String, Vec<String>>,
}

fn bad(what: &str, s: &str) -> CliError {
    CliError::Fixtures(format!("{what}: cannot parse {s:?}"))
}

pub fn num(s: &str) -> Result<Rational, CliError> {
    parse_rat(s).ok_or_else(|| bad("number", s))
}

pub fn poly(cs: &[String]) -> Result<Poly<Rational>, CliError> {
    Ok(Poly::new(cs.iter().map(|c| num(c)).collect::<Result<_, _>>()?))
}

impl Fixtures {
    pub fn load() -> Result<Self, CliError> {
        match std::env::var_os(ENV_VAR) {
            Some(p) => Self::from_path(Path::new(&p)),
            None => Self::parse(EMBEDDED),
        }
    }

    pub fn embedded() -> Self {
        Self::parse(EMBEDDED).expect("checked-in fixtures parse")
    }

    pub fn from_path(p: &Path) -> Result<Self, CliError> {
        let s = std::fs::read_to_string(p)
            .map_err(|e| CliError::Fixtures(format!("{}: {e}", p.display())))?;
        Self::parse(&s)
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        serde_json::from_str(s).map_err(|e| CliError::Fixtures(e.to_string()))
    }

    pub fn ramification_constant(&self) -> Result<GaussianRational, CliError> {
        let c = &self.ramification_constant;
        let k = num(&c.scale)?;
        Ok(GaussianRational::new(num(&c.re)? * &k, num(&c.im)? * &k))
    }

    pub fn case1_locus(&self) -> Result<Poly2<Rational>, CliError> {
        let dx = self.case1_locus.iter().map(|t| t.i1).max().unwrap_or(0);
        let dy = self.case1_locus.iter().map(|t| t.i2).max().unwrap_or(0);
        let mut rows = vec![vec![Rational::from_i64(0); dy + 1]; dx + 1];
        for t in &self.case1_locus {
            rows[t.i1][t.i2] = num(&t.c)?;
        }
        Ok(Poly2::new(rows))
    }

    pub fn quadratics(&self, case_no: u8) -> Result<Vec<Poly<Rational>>, CliError> {
        let rows = self
            .fiber_quadratics
            .get(&case_no.to_string())
            .ok_or_else(|| CliError::Fixtures(format!("no quadratics for case {case_no}")))?;
        rows.iter()
            .map(|[a, b, c]| Ok(Poly::new(vec![num(c)?, num(b)?, num(a)?])))
            .collect()
    }

    pub fn fields(&self, case_no: u8) -> Result<Vec<String>, CliError> {
        self.moduli_fields
            .get(&case_no.to_string())
            .cloned()
            .ok_or_else(|| CliError::Fixtures(format!("no fields for case {case_no}")))
    }
}

impl PowerForm {
    pub fn eval(&self, l: &Rational) -> Result<Option<Rational>, CliError> {
        let d = poly(&self.den)?.eval(l);
        let Some(di) = d.inv() else { return Ok(None) };
        let w = poly(&self.num)?.eval(l) * &di;
        Ok(Some(num(&self.scalar)? * Field::pow(&w, u64::from(self.exponent))))
    }
}

impl FactoredFunction {
    pub fn to_function(&self) -> Result<RationalFunction<Rational>, CliError> {
        let prod = |fs: &[PowerFactor]| -> Result<Poly<Rational>, CliError> {
            let mut acc = Poly::one();
            for f in fs {
                acc = &acc * &poly(&f.poly)?.pow(f.exponent);
            }
            Ok(acc)
        };
        let n = prod(&self.num)?.scale(&num(&self.scalar)?);
        RationalFunction::new(n, prod(&self.den)?)
            .map_err(|e| CliError::Fixtures(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        let f = Fixtures::embedded();
        assert_eq!(f.lambda_x5.len(), 13);
        assert_eq!(f.fiber_quadratics.len(), 8);
        for c in 1..=8u8 {
            assert_eq!(f.quadratics(c).unwrap().len(), 3);
            assert_eq!(f.fields(c).unwrap().len(), 3);
        }
        assert_eq!(f.ramification_constant().unwrap(), GaussianRational::from_ints(512, 256));
        let loc = f.case1_locus().unwrap();
        assert_eq!((loc.degree_x(), loc.degree_y()), (6, 4));
        assert!(f.case1_absolute.i2.to_function().is_ok());
    }
}
