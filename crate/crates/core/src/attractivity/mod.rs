//! Mittag-Leffler decay envelopes and property checks over trajectories:
//! boundedness, positivity, order preservation and the envelope itself.

mod checks;
mod envelope;

use thiserror::Error;

use crate::field::FieldError;
use crate::solver::SolverError;
use crate::special_fn::SpecialFnError;

pub use checks::{
    boundedness_check, boundedness_check_with, default_tolerance, envelope_check,
    envelope_check_with, log_log_slope, monotonicity_check, monotonicity_check_with, order_check,
    positivity_check, positivity_check_with, rate_summary, RateSummary,
};
pub use envelope::{
    capital_i, capital_i_with, condition_margins, search_eta, EnvelopeParams, ETA_FLOOR, ETA_HI,
    GRID_POINTS, MARGIN_EPS, SAFETY_FACTOR, T_CAP,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AttractivityError {
    #[error("no feasible decay rate down to eta = {eta_floor:e} (best margin {best_margin:e})")]
    Infeasible { eta_floor: f64, best_margin: f64 },
    #[error("premise violated: {0}")]
    Premise(String),
    #[error(transparent)]
    SpecialFn(#[from] SpecialFnError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
