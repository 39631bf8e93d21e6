//! The icosahedral subgroup of PGL2 over Q(ζ60), its invariant map φ of
//! degree 60 and the Klein forms R, S, T.

mod forms;
mod group;
mod moebius;
mod symmetric;

pub use forms::{
    phi, r_form, ramification_report, s_form, t_form, verify_icosahedral_identity,
    IdentityReport, RamificationReport,
};
pub use group::{is_latin_square, MoebiusGroup};
pub(crate) use moebius::hom_eval;
pub use moebius::MoebiusMap;
pub use symmetric::{
    moebius_relation, orbit_invariance_check, orbit_invariance_check_full, symmetric_generator,
    symmetric_generators,
};

use crate::exactfield::{AlgebraicNumber, Field};
use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IcosaError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("identity fails at coefficient {index}")]
    IdentityFailed { index: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// σ1 = [[ω, 1], [1, −ω]], of order 2.
pub fn sigma1() -> MoebiusMap<AlgebraicNumber> {
    let w = AlgebraicNumber::omega();
    MoebiusMap::new(w.clone(), AlgebraicNumber::from_i64(1), AlgebraicNumber::from_i64(1), -w)
        .expect("det = −ω² − 1 ≠ 0")
}

/// σ2 = [[ε², 0], [0, 1]], of order 5.
pub fn sigma2() -> MoebiusMap<AlgebraicNumber> {
    let e = AlgebraicNumber::epsilon();
    MoebiusMap::scaling(e.clone() * &e).expect("nonzero")
}

/// ⟨σ1, σ2⟩, the 60-element copy of A5.
pub fn build_a5() -> MoebiusGroup<AlgebraicNumber> {
    MoebiusGroup::generate(&[sigma1(), sigma2()], 60).expect("A5 is finite")
}
