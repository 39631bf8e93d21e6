//! Command line front end for `a5curve`: JSON/text output of curves,
//! invariants, loci and models, plus the `verify` reproduction suite.

pub mod checks;
pub mod commands;
pub mod encode;
pub mod fixtures;
pub mod report;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use a5curve::Rational;

use crate::commands::{LocusEmit, ModelChoice};
use crate::encode::parse_rat;
use crate::fixtures::Fixtures;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("fixtures: {0}")]
    Fixtures(String),
    #[error("{message}")]
    Domain { kind: String, message: String },
}

/// Variant name of a library error, looking through the transparent
/// wrappers so `Family(NotInLocus(7))` reports `NotInLocus`.
fn error_kind(debug: &str) -> String {
    const WRAPPERS: [&str; 6] = ["Family(", "Invariant(", "Poly(", "Field(", "Icosa(", "Decomp("];
    let mut s = debug;
    while let Some(w) = WRAPPERS.iter().find(|w| s.starts_with(**w)) {
        s = &s[w.len()..];
    }
    s.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect()
}

macro_rules! domain_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain { kind: error_kind(&format!("{e:?}")), message: e.to_string() }
            }
        }
    )*};
}

domain_errors!(
    a5curve::families::FamilyError,
    a5curve::invariants::InvariantError,
    a5curve::loci::LociError,
    a5curve::decomp::DecompError,
    a5curve::icosa::IcosaError,
    a5curve::polyring::PolyError
);

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Fixtures(_) | CliError::Domain { .. } => EXIT_DOMAIN,
        }
    }

    pub fn to_json(&self) -> Value {
        let kind = match self {
            CliError::Usage(_) => "UsageError",
            CliError::Fixtures(_) => "FixturesError",
            CliError::Domain { kind, .. } => kind,
        };
        serde_json::json!({ "error": kind, "message": self.to_string() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "a5curve", version, about = "Hyperelliptic curves with reduced automorphism group A5")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Worker threads for parallel checks; defaults to the number of cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum IcosaCmd {
    /// The 60 Moebius maps of A5 over Q(zeta60).
    Group,
    /// phi = -R^3/S^5 and its relation to the symmetric functions.
    Phi,
    /// Group and identity checks.
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum DecompCmd {
    /// phi1 = phi(sigma^-1) over Q(i).
    Phi1,
    /// Decompose through x^5, x^2 or x^3.
    Check {
        #[arg(long)]
        inner: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Command {
    #[command(subcommand)]
    Icosa(IcosaCmd),
    #[command(subcommand)]
    Decomp(DecompCmd),
    /// y^2 = f(x) for a genus and branch values.
    Curve {
        #[arg(long)]
        genus: usize,
        /// Comma-separated rationals p/q.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<String>,
        #[arg(long, value_enum, default_value = "x5")]
        model: ModelChoice,
    },
    /// Classical and dihedral invariants of a curve.
    Invariants {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<String>,
        #[arg(long)]
        absolute: bool,
        #[arg(long)]
        dihedral: bool,
        #[arg(long)]
        all: bool,
    },
    /// The delta = 1 locus of a case.
    Locus {
        #[arg(long = "case")]
        case_no: u8,
        #[arg(long, value_enum, default_value = "F")]
        emit: LocusEmit,
    },
    /// A model over the field of moduli.
    Model {
        #[arg(long, conflicts_with_all = ["case_no", "fiber"])]
        genus: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<String>,
        #[arg(long = "case", requires = "fiber")]
        case_no: Option<u8>,
        #[arg(long, requires = "case_no")]
        fiber: Option<usize>,
    },
    /// Run the reproduction suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn parse_lambdas(v: &[String]) -> Result<Vec<Rational>, CliError> {
    v.iter()
        .map(|s| parse_rat(s).ok_or_else(|| CliError::Usage(format!("not a rational: {s:?}"))))
        .collect()
}

/// The output document and whether it reports a verification failure.
fn execute(cmd: Command) -> Result<(Value, bool), CliError> {
    fn doc<T: Serialize>(v: T) -> Result<(Value, bool), CliError> {
        Ok((serde_json::to_value(v).expect("serializable"), true))
    }
    let verify = |suite: &str| -> Result<(Value, bool), CliError> {
        let fx = Fixtures::load()?;
        let r = commands::verify(suite, &fx)?;
        let ok = r.ok();
        Ok((serde_json::to_value(r).expect("serializable"), ok))
    };
    match cmd {
        Command::Icosa(IcosaCmd::Group) => doc(commands::icosa_group()),
        Command::Icosa(IcosaCmd::Phi) => doc(commands::icosa_phi()),
        Command::Icosa(IcosaCmd::Verify) => verify("icosa"),
        Command::Decomp(DecompCmd::Phi1) => doc(commands::decomp_phi1()?),
        Command::Decomp(DecompCmd::Check { inner }) => doc(commands::decomp_check(&inner)?),
        Command::Curve { genus, lambda, model } => doc(commands::curve(genus, &parse_lambdas(&lambda)?, model)?),
        Command::Invariants { genus, lambda, absolute, dihedral, all } => {
            let ls = parse_lambdas(&lambda)?;
            // absolute invariants unless only --dihedral was asked for
            let abs = all || absolute || !dihedral;
            doc(commands::invariants(genus, &ls, abs, all || dihedral)?)
        }
        Command::Locus { case_no, emit } => doc(commands::locus(case_no, emit)?),
        Command::Model { genus, lambda, case_no, fiber } => match (genus, case_no, fiber) {
            (Some(g), None, None) => doc(commands::model_nonsingular(g, &parse_lambdas(&lambda)?)?),
            (None, Some(c), Some(k)) => doc(commands::model_singular(c, k)?),
            _ => Err(CliError::Usage("model needs --genus (with --lambda) or --case with --fiber".into())),
        },
        Command::Verify { suite } => verify(&suite),
    }
}

/// Indented `key: value` lines; arrays of scalars stay on one line.
pub fn render_text(v: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::String(s) => Some(s.clone()),
            Value::Null => Some("-".into()),
            Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
            _ => None,
        }
    }
    fn go(v: &Value, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                        None => match x {
                            Value::Array(a) if a.iter().all(|y| scalar(y).is_some()) => {
                                let items: Vec<String> = a.iter().filter_map(scalar).collect();
                                out.push_str(&format!("{pad}{k}: [{}]\n", items.join(", ")));
                            }
                            _ => {
                                out.push_str(&format!("{pad}{k}:\n"));
                                go(x, depth + 1, out);
                            }
                        },
                    }
                }
            }
            Value::Array(a) => {
                for x in a {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}-\n"));
                            go(x, depth + 1, out);
                        }
                    }
                }
            }
            other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
        }
    }
    let mut out = String::new();
    go(v, 0, &mut out);
    out
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match execute(cli.command) {
        Ok((v, ok)) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
                Format::Text => render_text(&v),
            };
            let _ = stdout.write_all(text.as_bytes());
            if ok {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.to_json());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_look_through_wrappers() {
        assert_eq!(error_kind("Family(NotInLocus(7))"), "NotInLocus");
        assert_eq!(error_kind("Invariant(Family(WrongParameterCount { expected: 1, got: 0 }))"), "WrongParameterCount");
        assert_eq!(error_kind("SingularPoint"), "SingularPoint");
    }

    #[test]
    fn text_rendering() {
        let v = serde_json::json!({"a": "1/2", "b": ["x", "y"], "c": {"d": true}});
        assert_eq!(render_text(&v), "a: 1/2\nb: [x, y]\nc:\n  d: true\n");
    }
}
