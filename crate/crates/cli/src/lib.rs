//! Scenario files, the reproduction suite and report formatting behind the
//! `nilflux` binary.

pub mod reproduce;
pub mod render;
pub mod run;
pub mod scenario;

pub use reproduce::{reproduce_paper, SuiteCheck};
pub use run::{p1_raw, run_scenario};
pub use scenario::{Check, Scenario, ScenarioError};
