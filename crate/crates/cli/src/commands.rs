use std::collections::BTreeMap;

use a5curve::decomp::{cube_branch, left_factor, phi1, ramification_constant};
use a5curve::families::{classify_genus, curve_equation_x2, curve_equation_x5, even_model, CaseDescriptor};
use a5curve::icosa::{build_a5, is_latin_square, moebius_relation, phi, sigma1, sigma2, symmetric_generators, MoebiusMap};
use a5curve::invariants::{check_group_relation, classical_invariants_q, dihedral_invariants, form_of_curve, GroupRelation};
use a5curve::loci::{build_locus, field_of_moduli_at, rational_model, singular_fibers, singular_model};
use a5curve::polyring::{Poly, RationalFunction};
use a5curve::{AlgebraicNumber, Field, GaussianRational, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::checks::{run_suites, Suite};
use crate::encode::{rat, Encode, Num, Poly2Doc, PolyDoc, RatFunDoc};
use crate::fixtures::Fixtures;
use crate::report::Report;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub a: Num,
    pub b: Num,
    pub c: Num,
    pub d: Num,
}

impl MatrixDoc {
    fn new<F: Field + Encode>(m: &MoebiusMap<F>) -> Self {
        let [a, b, c, d] = m.entries();
        MatrixDoc {
            a: a.encode(),
            b: b.encode(),
            c: c.encode(),
            d: d.encode(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub order: usize,
    /// Element order to multiplicity.
    pub order_profile: BTreeMap<usize, usize>,
    pub closed: bool,
    pub latin_square: bool,
    pub generators: Vec<MatrixDoc>,
}

pub fn icosa_group() -> GroupDoc {
    let g = build_a5();
    GroupDoc {
        order: g.order(),
        order_profile: g.order_profile(),
        closed: g.is_closed(),
        latin_square: is_latin_square(&g.multiplication_table()),
        generators: vec![MatrixDoc::new(&sigma1()), MatrixDoc::new(&sigma2())],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiDoc {
    pub phi: RatFunDoc,
    pub degree: usize,
    /// Indices i with s_i constant.
    pub constant_indices: Vec<usize>,
    pub first_nonconstant: Option<usize>,
    /// M with s_k = M(phi) for k = first_nonconstant.
    pub moebius: Option<MatrixDoc>,
}

pub fn icosa_phi() -> PhiDoc {
    let p = phi();
    let s = symmetric_generators(&build_a5());
    let constant_indices = (1..=s.len()).filter(|&i| s[i - 1].is_constant()).collect();
    let first = s.iter().position(|f| !f.is_constant());
    let moebius = first.and_then(|k| {
        moebius_relation(&s[k], &p.map(AlgebraicNumber::from_rational)).map(|m| MatrixDoc::new(&m))
    });
    PhiDoc {
        phi: RatFunDoc::new("x", &p),
        degree: p.degree(),
        constant_indices,
        first_nonconstant: first.map(|k| k + 1),
        moebius,
    }
}

pub fn verify(suite: &str, fx: &Fixtures) -> Result<Report, CliError> {
    let suites = Suite::parse(suite).ok_or_else(|| CliError::Usage(format!("unknown suite {suite:?}")))?;
    Ok(Report::new(suite, run_suites(&suites, fx)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Phi1Doc {
    pub phi1: RatFunDoc,
    pub degree: usize,
    /// c in 64 R̄³ − 1728 S̄⁵ = c T̄².
    pub ramification_constant: Option<Num>,
}

pub fn decomp_phi1() -> Result<Phi1Doc, CliError> {
    let f = phi1()?;
    Ok(Phi1Doc {
        phi1: RatFunDoc::new("x", &f),
        degree: f.degree(),
        ramification_constant: ramification_constant().map(|c| c.encode()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompDoc {
    pub target: String,
    pub inner: String,
    pub outer_degree: usize,
    pub verified: bool,
    pub outer: RatFunDoc,
}

pub fn decomp_check(inner: &str) -> Result<DecompDoc, CliError> {
    let none = || CliError::Usage(format!("no decomposition through {inner}"));
    let (target, outer_degree, verified, outer) = match inner {
        "x5" => {
            let h = RationalFunction::from_poly(Poly::monomial(Rational::from_i64(1), 5));
            let d = left_factor(&phi(), &h)?.ok_or_else(none)?;
            ("phi", d.outer.degree(), d.verify(), RatFunDoc::new("t", &d.outer))
        }
        "x2" => {
            let h = RationalFunction::from_poly(Poly::monomial(GaussianRational::from_i64(1), 2));
            let d = left_factor(&phi1()?, &h)?.ok_or_else(none)?;
            ("phi1", d.outer.degree(), d.verify(), RatFunDoc::new("t", &d.outer))
        }
        "x3" => {
            let d = cube_branch()?;
            ("phi conjugated by an order-3 normaliser", d.outer.degree(), d.verify(), RatFunDoc::new("t", &d.outer))
        }
        other => return Err(CliError::Usage(format!("unknown inner function {other:?}; use x5, x2 or x3"))),
    };
    Ok(DecompDoc {
        target: target.to_string(),
        inner: inner.to_string(),
        outer_degree,
        verified,
        outer,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseDoc {
    pub case_no: u8,
    pub group: String,
    pub delta: usize,
    pub multipliers: Vec<String>,
    pub genus: usize,
}

impl CaseDoc {
    fn new(c: &CaseDescriptor) -> Self {
        CaseDoc {
            case_no: c.case_no,
            group: c.group.to_string(),
            delta: c.delta,
            multipliers: c.multipliers.iter().map(|m| m.to_string()).collect(),
            genus: c.genus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ModelChoice {
    X5,
    X2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDoc {
    pub genus: usize,
    pub model: String,
    pub case: CaseDoc,
    pub lambda: Vec<String>,
    pub degree: usize,
    pub squarefree: bool,
    pub weierstrass_points: usize,
    pub f: PolyDoc,
}

pub fn curve(genus: usize, ls: &[Rational], model: ModelChoice) -> Result<CurveDoc, CliError> {
    let (case, degree, squarefree, wp, f, kind) = match model {
        ModelChoice::X5 => {
            let c = curve_equation_x5(genus, ls)?;
            let (s, w) = (c.is_squarefree(), c.weierstrass_count());
            (c.case, c.f.deg(), s, w, PolyDoc::new("x", &c.f), c.model)
        }
        ModelChoice::X2 => {
            let c = curve_equation_x2(genus, ls)?;
            let (s, w) = (c.is_squarefree(), c.weierstrass_count());
            (c.case, c.f.deg(), s, w, PolyDoc::new("x", &c.f), c.model)
        }
    };
    Ok(CurveDoc {
        genus,
        model: kind.to_string(),
        case: CaseDoc::new(&case),
        lambda: ls.iter().map(rat).collect(),
        degree,
        squarefree,
        weierstrass_points: wp,
        f,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct AbsoluteDoc {
    pub I2: String,
    pub I4: String,
    pub I6: String,
    pub I6s: Option<String>,
    pub i1: Option<String>,
    pub i2: Option<String>,
    pub i3: Option<String>,
    pub i4: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralDoc {
    pub d: usize,
    /// u₁..u_{d−1} of the x²-model.
    pub u: Vec<Num>,
    pub relation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsDoc {
    pub genus: usize,
    pub lambda: Vec<String>,
    pub absolute: Option<AbsoluteDoc>,
    pub dihedral: Option<DihedralDoc>,
}

fn relation_name(r: GroupRelation) -> &'static str {
    match r {
        GroupRelation::Z2xA5 => "Z2xA5",
        GroupRelation::SL2_5 => "SL2_5",
        GroupRelation::Neither => "neither",
    }
}

pub fn invariants(genus: usize, ls: &[Rational], absolute: bool, dihedral: bool) -> Result<InvariantsDoc, CliError> {
    let abs = if absolute {
        let c = curve_equation_x5(genus, ls)?;
        let s = classical_invariants_q(&form_of_curve(&c.f, genus))?;
        let o = |v: &Option<Rational>| v.as_ref().map(rat);
        Some(AbsoluteDoc {
            I2: rat(&s.I2),
            I4: rat(&s.I4),
            I6: rat(&s.I6),
            I6s: o(&s.I6s),
            i1: o(&s.i1),
            i2: o(&s.i2),
            i3: o(&s.i3),
            i4: o(&s.i4),
        })
    } else {
        None
    };
    let dih = if dihedral {
        let c = curve_equation_x2(genus, ls)?;
        let u = dihedral_invariants(&even_model(&c.f)?.b)?;
        Some(DihedralDoc {
            d: u.d,
            relation: relation_name(check_group_relation(&u)).to_string(),
            u: u.u.iter().map(Encode::encode).collect(),
        })
    } else {
        None
    };
    Ok(InvariantsDoc {
        genus,
        lambda: ls.iter().map(rat).collect(),
        absolute: abs,
        dihedral: dih,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum LocusEmit {
    #[value(name = "F")]
    F,
    Fibers,
    Moduli,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusDoc {
    pub case_no: u8,
    pub genus: usize,
    pub i1: RatFunDoc,
    pub i2: RatFunDoc,
    /// F as eliminated, primitive over the integers.
    pub raw: Poly2Doc,
    /// (κ₁, κ₂) relating the emitted i₁, i₂ to the reference normalisation.
    pub kappa: [String; 2],
    /// F satisfied by (κ₁i₁, κ₂i₂).
    pub rescaled: Poly2Doc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberDoc {
    pub row: usize,
    pub kind: String,
    /// [a, b, c] of aλ² + bλ + c.
    pub quadratic: [String; 3],
    pub discriminant: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliDoc {
    pub row: usize,
    pub kind: String,
    pub d: String,
    pub certified: bool,
    /// i₃ at the fibre root, or I₆*/I₆ where I₂ vanishes.
    pub invariant: Num,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LocusOutput {
    Curve(Box<LocusDoc>),
    Fibers { case_no: u8, fibers: Vec<FiberDoc> },
    Moduli { case_no: u8, fields: Vec<ModuliDoc> },
}

/// The reference normalisation agrees with ours exactly; κ is recorded so
/// the rescaled form is explicit.
const KAPPA: (i64, i64) = (1, 1);

pub fn locus(case_no: u8, emit: LocusEmit) -> Result<LocusOutput, CliError> {
    let l = build_locus(case_no)?;
    Ok(match emit {
        LocusEmit::F => {
            let (k1, k2) = (Rational::from_i64(KAPPA.0), Rational::from_i64(KAPPA.1));
            let rescaled = l.rescaled(&k1, &k2).ok_or_else(|| CliError::Usage("zero kappa".into()))?;
            LocusOutput::Curve(Box::new(LocusDoc {
                case_no,
                genus: l.genus,
                i1: RatFunDoc::new("lambda", &l.i1),
                i2: RatFunDoc::new("lambda", &l.i2),
                raw: Poly2Doc::new(&l.f),
                kappa: [rat(&k1), rat(&k2)],
                rescaled: Poly2Doc::new(&rescaled),
            }))
        }
        LocusEmit::Fibers => {
            let fibers = singular_fibers(&l)?
                .iter()
                .enumerate()
                .map(|(k, f)| {
                    let c = f.q.coeffs();
                    FiberDoc {
                        row: k + 1,
                        kind: f.kind.to_string(),
                        quadratic: [rat(&c[2]), rat(&c[1]), rat(&c[0])],
                        discriminant: f.disc.to_string(),
                    }
                })
                .collect();
            LocusOutput::Fibers { case_no, fibers }
        }
        LocusEmit::Moduli => {
            let fields = singular_fibers(&l)?
                .iter()
                .enumerate()
                .map(|(k, f)| {
                    let m = field_of_moduli_at(f, &l)?;
                    Ok(ModuliDoc {
                        row: k + 1,
                        kind: f.kind.to_string(),
                        d: m.d.to_string(),
                        certified: m.certified,
                        invariant: m.i3.encode(),
                    })
                })
                .collect::<Result<_, CliError>>()?;
            LocusOutput::Moduli { case_no, fields }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDoc {
    pub genus: usize,
    pub group: String,
    /// Present for the singular path: the model lives over Q(√d).
    pub d: Option<String>,
    pub case_no: Option<u8>,
    pub fiber: Option<String>,
    pub f: PolyDoc,
}

pub fn model_nonsingular(genus: usize, ls: &[Rational]) -> Result<ModelDoc, CliError> {
    classify_genus(genus)?;
    let c = curve_equation_x2(genus, ls)?;
    let u = dihedral_invariants(&even_model(&c.f)?.b)?;
    let m = rational_model(&u, genus)?;
    // the coefficients are real for rational λ; emit them over Q when so
    let f = if m.f.coeffs().iter().all(|c| c.im.is_zero()) {
        PolyDoc::new("x", &m.f.map(|c| c.re.clone()))
    } else {
        PolyDoc::new("x", &m.f)
    };
    Ok(ModelDoc {
        genus,
        group: m.group.to_string(),
        d: None,
        case_no: None,
        fiber: None,
        f,
    })
}

pub fn model_singular(case_no: u8, fiber: usize) -> Result<ModelDoc, CliError> {
    if !(1..=3).contains(&fiber) {
        return Err(CliError::Usage(format!("fiber {fiber} is not in 1..=3")));
    }
    let l = build_locus(case_no)?;
    let fibers = singular_fibers(&l)?;
    let fb = &fibers[fiber - 1];
    let m = singular_model(case_no, fb)?;
    Ok(ModelDoc {
        genus: m.genus,
        group: m.group.to_string(),
        d: Some(m.d.to_string()),
        case_no: Some(case_no),
        fiber: Some(fb.kind.to_string()),
        f: PolyDoc {
            var: "x".into(),
            coeffs: m.f.iter().map(Encode::encode).collect(),
        },
    })
}
