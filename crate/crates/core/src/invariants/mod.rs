//! Transvectants, classical invariants of binary forms and the dihedral
//! invariants of even polynomials.

mod classical;
mod dihedral;
mod lambda;
mod transvectant;

pub use classical::{
    classical_invariants, classical_invariants_q, covariant_self_invariants, form_of_curve,
    covariant_vanishing, InvariantSet,
};
pub use dihedral::{
    check_group_relation, cube_root_symmetry, dihedral_invariants, symmetric_from_dihedral,
    DihedralInvariants, DihedralInversion, GroupRelation,
};
pub use lambda::{
    case_form, case_invariants_at, kappa_at, kappa_constant, sample_lambdas, LambdaInvariants,
    SAMPLE_COUNT,
};
pub use transvectant::{transvectant, transvectant_q, ScaledForm};

use crate::families::FamilyError;
use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("transvectant order {r} exceeds the degrees {m} and {n}")]
    OrderTooLarge { r: usize, m: usize, n: usize },
    #[error("form degree {0} is too small")]
    DegreeTooSmall(usize),
    #[error("I2 vanishes, absolute invariants are undefined")]
    NormalizationUndefined,
    #[error("leading or trailing coefficient vanishes")]
    DegenerateLeadingOrTrailing,
    #[error("linear system has no unique solution")]
    SingularSystem,
    #[error("quantity expected to be constant on the family is not")]
    NotConstantOnLocus,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
