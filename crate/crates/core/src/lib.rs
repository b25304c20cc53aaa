//! Simulation and verification toolkit for multi-order Caputo fractional
//! cooperative systems.
//!
//! - [`special_fn`]: Mittag-Leffler functions, fractional integrals and derivatives.
//! - [`field`]: vector fields, a text format for them, and structural checks.
//! - [`solver`]: fractional Adams predictor-corrector and trajectory validation.
//! - [`attractivity`]: decay envelopes and trajectory property checks.
//! - [`kolmogorov`]: Lotka-Volterra type systems and their equilibria.
//! - [`systems`]: the three reference systems.

pub mod attractivity;
pub mod cli;
pub mod field;
pub mod kolmogorov;
pub mod report;
pub mod solver;
pub mod special_fn;
pub mod systems;

pub use report::Verdict;
