use std::path::PathBuf;
use std::process::{Command, Output};

use a5curve_cli::commands::{CurveDoc, InvariantsDoc, LocusOutput, ModelDoc};
use a5curve_cli::report::{Report, Status};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_env(args, None)
}

fn run_env(args: &[&str], fixtures: Option<&PathBuf>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_a5curve"));
    cmd.args(args).env_remove("ICOSA_FIXTURES");
    if let Some(p) = fixtures {
        cmd.env("ICOSA_FIXTURES", p);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Parses into the typed document and checks that writing it back gives
/// the same bytes.
fn round_trip<T: DeserializeOwned + Serialize>(o: &Output) -> T {
    let s = stdout(o);
    let doc: T = serde_json::from_str(&s).expect("matches the schema");
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", s);
    doc
}

#[test]
fn genus_outside_the_locus() {
    let o = run(&["curve", "--genus", "7"]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "NotInLocus");
    assert!(o.stdout.is_empty());
}

#[test]
fn missing_branch_value() {
    let o = run(&["curve", "--genus", "29"]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "WrongParameterCount");
}

#[test]
fn usage_errors() {
    for args in [
        &["frobnicate"][..],
        &["curve", "--genus", "29", "--lambda", "1/0"],
        &["verify", "--suite", "tables"],
        &["model", "--case", "1"],
        &["decomp", "check", "--inner", "x7"],
    ] {
        assert_eq!(run(args).status.code(), Some(64), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn icosa_suite_passes() {
    let o = run(&["verify", "--suite", "icosa"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = round_trip(&o);
    assert!(r.checks.iter().all(|c| c.status == Status::Pass));
    for id in ["group.order", "group.order_profile", "fixed_field.moebius", "identity.klein"] {
        assert!(r.checks.iter().any(|c| c.id == id), "{id}");
    }
}

#[test]
fn case1_locus_equation() {
    let o = run(&["locus", "--case", "1", "--emit", "F"]);
    assert_eq!(o.status.code(), Some(0));
    let LocusOutput::Curve(doc) = round_trip::<LocusOutput>(&o) else {
        panic!("expected the curve document");
    };
    assert_eq!((doc.rescaled.degree_i1, doc.rescaled.degree_i2), (6, 4));
    assert_eq!(doc.rescaled.coeff(0, 4), Some("20104543529222176607891970551365425625"));
    assert_eq!(doc.kappa, ["1".to_string(), "1".to_string()]);
}

#[test]
fn documents_round_trip() {
    let c: CurveDoc = round_trip(&run(&["curve", "--genus", "44", "--lambda", "-3/2", "--model", "x2"]));
    assert_eq!((c.case.case_no, c.degree, c.weierstrass_points), (5, 89, 90));
    let i: InvariantsDoc = round_trip(&run(&["invariants", "--genus", "29", "--lambda", "5", "--all"]));
    assert_eq!(i.dihedral.unwrap().relation, "Z2xA5");
    let m: ModelDoc = round_trip(&run(&["model", "--genus", "29", "--lambda", "7/2"]));
    assert_eq!(m.f.coeffs.len(), 61);
    let f: LocusOutput = round_trip(&run(&["locus", "--case", "1", "--emit", "fibers"]));
    assert!(matches!(f, LocusOutput::Fibers { ref fibers, .. } if fibers.len() == 3));
}

#[test]
fn output_is_byte_stable() {
    let a = run(&["verify", "--suite", "families", "--threads", "1"]);
    let b = run(&["verify", "--suite", "families", "--threads", "6"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let x = run(&["locus", "--case", "3", "--emit", "moduli"]);
    let y = run(&["locus", "--case", "3", "--emit", "moduli", "--threads", "2"]);
    assert_eq!(x.stdout, y.stdout);
}

#[test]
fn text_format() {
    let o = run(&["curve", "--genus", "35", "--lambda", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("genus: 35\n"));
    assert!(s.contains("  multipliers: [S]\n"));
}

fn fixtures_with_constant(name: &str, re: &str, im: &str) -> PathBuf {
    let base: Value = serde_json::from_str(include_str!("../fixtures/reference.json")).unwrap();
    let mut v = base;
    v["ramification_constant"]["re"] = Value::from(re);
    v["ramification_constant"]["im"] = Value::from(im);
    let p = std::env::temp_dir().join(format!("a5curve-{}-{name}.json", std::process::id()));
    std::fs::write(&p, serde_json::to_string(&v).unwrap()).unwrap();
    p
}

#[test]
fn fixtures_override() {
    // 64R̄³ − 1728S̄⁵ = 256(1 + 2i)T̄²; the checked-in constant is 256(2 + i)
    let good = fixtures_with_constant("good", "1", "2");
    let o = run_env(&["verify", "--suite", "decomp"], Some(&good));
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--suite", "decomp"]);
    assert_eq!(o.status.code(), Some(2));
    let r: Report = round_trip(&o);
    let failed: Vec<&str> = r.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    assert_eq!(failed, ["identity.barred"]);
    let _ = std::fs::remove_file(good);

    let missing = PathBuf::from("/nonexistent/fixtures.json");
    let o = run_env(&["verify", "--suite", "icosa"], Some(&missing));
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "FixturesError");
}
