//! Exact simulation of quantum hidden subgroup algorithms over `Z_Q` and `S_N`.
//!
//! The numeric modules are generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar to `f64`, which is what the experiments use.

pub mod error;
pub mod groups;
pub mod grover;
pub mod hsp;
pub mod linalg;
pub mod qsim;
pub mod repr;
pub mod scalar;
pub mod shor;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Matrix = linalg::Matrix<f64>;
pub type Irrep = repr::Irrep<f64>;
pub type FourierBasis = qsim::FourierBasis<f64>;
pub type BipartiteState = qsim::BipartiteState<f64>;
pub type OutcomeDistribution = qsim::OutcomeDistribution<f64>;
pub type WeakMarginal = qsim::WeakMarginal<f64>;
pub type QrandSample = qsim::QrandSample<f64>;
pub type GroverState = grover::GroverState<f64>;
pub type GroverOutcome = grover::GroverOutcome<f64>;
pub type NoInfoReport = grover::NoInfoReport<f64>;

pub type Irrep32 = repr::Irrep<f32>;
pub type OutcomeDistribution32 = qsim::OutcomeDistribution<f32>;
pub type GroverState32 = grover::GroverState<f32>;
