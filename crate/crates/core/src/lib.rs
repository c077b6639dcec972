//! Second Lie-algebra cohomology and central extensions from exact-rational
//! structure constants, with a symbolic Weyl-algebra oracle for the
//! quadratic sp(2n) realization and a truncated Fock-space numeric check.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod dsl;
pub mod error;
pub mod fock;
pub mod matrix;
pub mod rational;
pub mod report;
pub mod weyl;

pub use algebra::{AlgebraElement, LieAlgebra};
pub use cohomology::{CentralExtension, CohomologyResult, TwoCochain};
pub use error::CoreError;
pub use rational::Rat;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
