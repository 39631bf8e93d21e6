//! Exact computer algebra for hyperelliptic curves whose reduced automorphism
//! group is the icosahedral group A5.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is exact:
//! rationals, the cyclotomic field Q(ζ60), Gaussian rationals and quadratic
//! fields Q(√D). Floating point never appears.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decomp;
pub mod exactfield;
pub mod families;
pub mod icosa;
pub mod invariants;
pub mod loci;
pub mod polyring;

pub use exactfield::{AlgebraicNumber, Field, GaussianRational, QuadraticElement, Rational};

pub use polyring::{BinaryForm, Poly, RationalFunction};
