//! Exact verification of binary-ternary Hom-algebra identities.
//!
//! The library models finite-dimensional algebras by rational structure
//! constants on a fixed basis, runs exhaustive basis-tuple checks for the
//! classical and twisted Lie-Yamaguti axiom systems (plus the Hom-Nambu,
//! Hom-triple, Hom-Akivis, Hom-Lie and Hom-Malcev families), and builds the
//! standard twisting constructions that move between them. Everything is
//! exact: scalars are arbitrary-precision rationals and a passing axiom
//! means every residual is literally zero.

pub mod algebra;
pub mod construct;
pub mod error;
pub mod linalg;
pub mod morphism;
pub mod rational;
pub mod report;
pub mod suites;

pub use algebra::{
    algebras_equal, random_algebra, Algebra, BinaryTable, RandomOptions, TernaryTable,
};
pub use error::Error;
pub use linalg::{LinearMap, Vector};
pub use rational::Rational;
pub use report::{AxiomVerdict, CheckOptions, CheckReport, Counterexample};
pub use suites::{run_suite, B6Mode, SUITE_IDS};

#[cfg(test)]
pub(crate) mod testutil;
