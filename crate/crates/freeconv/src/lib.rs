//! Free additive convolution of selfadjoint elements that are free with
//! amalgamation over a finite-dimensional commutative algebra `L ≅ ℂ^d`.
//!
//! The crate computes the subordination functions `ω₁, ω₂` and the sum's
//! `L`-valued Cauchy transform at points of the upper half-plane of `L`,
//! extracts boundary limits along vertical rays (atom masses, the
//! `ϖ^ℑ/ϖ^ℜ` quantities, Julia–Carathéodory derivatives, `Ξ`), and runs the
//! invariant-projection checker together with a random-matrix validation
//! harness.
//!
//! Modules, bottom to top:
//!
//! * [`algebra`] — the commutative tracial algebra `ℂ^d` with weights.
//! * [`models`] — computable distribution models and their Cauchy transforms.
//! * [`subordination`] — the damped fixed-point subordination solver.
//! * [`boundary`] — vertical boundary limits via a geometric y-ladder.
//! * [`theorem`] — the invariant-projection checker and scalar atom oracle.
//! * [`montecarlo`] — block random-matrix ensembles and empirical resolvents.
//! * [`selftest`] — the acceptance battery used by the CLI and test suite.

pub mod algebra;
pub mod boundary;
mod error;
pub(crate) mod linalg;
pub mod models;
pub mod montecarlo;
pub(crate) mod rng;
pub mod selftest;
pub mod subordination;
pub mod theorem;

pub use error::{Error, Result};
