//! Exact symbolic computations on invariant forms of six-dimensional Lie
//! algebras: Hermitian structures, metric connections with torsion, their
//! curvature and Pontrjagin forms, anomaly cancellation and the heterotic
//! equations of motion.

pub mod anomaly;
pub mod complex;
pub mod connections;
pub mod eom;
pub mod error;
pub mod exterior;
pub mod frames;
pub mod golden;
pub mod hermitian;
pub mod notation;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use exterior::{KForm, MultiIndex, Vector, DIM};
pub use report::{AlphaPrime, Residual, VerificationReport};
pub use scalar::{Scalar, Var};
