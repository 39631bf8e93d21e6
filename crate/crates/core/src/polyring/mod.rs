//! Univariate and bivariate polynomials, rational functions, binary forms,
//! resultants and interpolation over any [`Field`](crate::exactfield::Field).

pub mod bivariate;
mod form;
pub mod interp;
pub mod linalg;
pub mod modp;
mod poly;
mod ratfun;
pub mod resultant;

pub use bivariate::Poly2;
pub use form::BinaryForm;
pub use interp::{interpolate, interpolate_grid};
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use resultant::{discriminant, resultant, sylvester_resultant};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("duplicate abscissa in interpolation data")]
    DuplicateAbscissa,
    #[error("interpolation data does not fit the degree bound")]
    InconsistentData,
    #[error("need {needed} points, got {got}")]
    NotEnoughPoints { needed: usize, got: usize },
    #[error("inner function of a composition is constant")]
    ConstantInner,
    #[error("linear system is singular")]
    SingularSystem,
}
