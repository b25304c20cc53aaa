//! Mittag-Leffler functions and numerical fractional operators.

mod gamma;
mod mittag_leffler;
mod operators;
pub(crate) mod quadrature;
pub(crate) mod weights;

use thiserror::Error;

pub use mittag_leffler::{ml, ml_one, mittag_leffler, MlQuery, MAX_ABS_ARGUMENT};
pub use gamma::{gamma, ln_gamma, rgamma};
pub use operators::{caputo_numeric, rl_integral, rl_integral_at};

/// Relative tolerance on the spacing of a uniform grid.
pub const GRID_UNIFORMITY_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecialFnError {
    #[error("invalid parameter {name} = {value} (expected {expected})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    #[error("non-finite argument {0}")]
    NonFiniteArgument(f64),
    #[error("argument {z} outside supported range |z| <= {limit}")]
    ArgumentOutOfRange { z: f64, limit: f64 },
    #[error("Mittag-Leffler value overflows for {0:?}")]
    Overflow(MlQuery),
    #[error("grid is not uniform at index {index}")]
    NonUniformGrid { index: usize },
    #[error("grid must start at t = 0, found {0}")]
    GridNotAtOrigin(f64),
    #[error("need at least {needed} grid points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("times and values differ in length ({times} vs {values})")]
    LengthMismatch { times: usize, values: usize },
    #[error("fractional order {0} outside (0, 1]")]
    InvalidOrder(f64),
}

/// Values of a function on the uniform grid `start + k·step`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    start: f64,
    step: f64,
    values: Vec<f64>,
}

impl SampledFunction {
    /// Grid `0, step, 2·step, …` carrying `values`.
    pub fn uniform(step: f64, values: Vec<f64>) -> Result<Self, SpecialFnError> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(SpecialFnError::InvalidParameter {
                name: "step",
                value: step,
                expected: "finite step > 0",
            });
        }
        Ok(Self {
            start: 0.0,
            step,
            values,
        })
    }

    /// Samples `f` at `0, step, …, (n-1)·step`.
    pub fn from_fn(step: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self, SpecialFnError> {
        let values = (0..n).map(|k| f(k as f64 * step)).collect();
        Self::uniform(step, values)
    }

    /// Builds from explicit grid times, checking that they start at zero and
    /// are uniform to within [`GRID_UNIFORMITY_TOL`].
    pub fn from_times(times: &[f64], values: Vec<f64>) -> Result<Self, SpecialFnError> {
        if times.len() != values.len() {
            return Err(SpecialFnError::LengthMismatch {
                times: times.len(),
                values: values.len(),
            });
        }
        if times.len() < 2 {
            return Err(SpecialFnError::TooFewPoints {
                needed: 2,
                got: times.len(),
            });
        }
        if times[0] != 0.0 {
            return Err(SpecialFnError::GridNotAtOrigin(times[0]));
        }
        let step = (times[times.len() - 1] - times[0]) / (times.len() - 1) as f64;
        if !(step > 0.0) {
            return Err(SpecialFnError::NonUniformGrid { index: 1 });
        }
        for (k, &t) in times.iter().enumerate() {
            let expected = k as f64 * step;
            if (t - expected).abs() > GRID_UNIFORMITY_TOL * step.max(expected.abs()) {
                return Err(SpecialFnError::NonUniformGrid { index: k });
            }
        }
        Self::uniform(step, values)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn time(&self, k: usize) -> f64 {
        self.start + k as f64 * self.step
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.len()).map(|k| self.time(k)).collect()
    }

    /// `(t, value)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values.iter().enumerate().map(|(k, &v)| (self.time(k), v))
    }
}
