//! Vector fields on the nonnegative orthant and checks of the structural
//! hypotheses used by the attractivity results: cooperativity, homogeneity
//! and the existence of a decay direction.

mod hypotheses;
mod parse;

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use thiserror::Error;

pub use hypotheses::{
    analyze, check_cooperative, check_cooperative_with, estimate_homogeneity_degree,
    find_decay_direction, AnalyzeOptions, CooperativityCheck, DecayDirection,
    HomogeneityEstimate, HypothesisReport, DEFAULT_SEED, TOL_METZLER,
};
pub(crate) use hypotheses::fmt_vec;
pub use parse::{parse_field, Expr, FieldSpec, ParseError};

/// Relative step of the finite-difference Jacobian.
pub const FD_STEP: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight entry {index} = {value} is not strictly positive")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("Jacobian is not finite at {point:?}")]
    NonFiniteJacobian { point: Vec<f64> },
    #[error("field vanishes at every probe point; degree is undefined")]
    DegenerateField,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

type EvalFn = dyn Fn(&[f64], &mut [f64]) + Send + Sync;
type JacobianFn = dyn Fn(&[f64], &mut DMatrix<f64>) + Send + Sync;

/// A `d`-dimensional vector field with an optional analytic Jacobian.
///
/// Cloning is cheap; the closures are shared.
#[derive(Clone)]
pub struct VectorField {
    dim: usize,
    eval: Arc<EvalFn>,
    jacobian: Option<Arc<JacobianFn>>,
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VectorField")
            .field("dim", &self.dim)
            .field("analytic_jacobian", &self.jacobian.is_some())
            .finish()
    }
}

impl VectorField {
    /// `eval(w, out)` must write `f(w)` into `out` and be safe to call from
    /// several threads at once.
    pub fn new(dim: usize, eval: impl Fn(&[f64], &mut [f64]) + Send + Sync + 'static) -> Self {
        assert!(dim > 0, "field dimension must be positive");
        Self {
            dim,
            eval: Arc::new(eval),
            jacobian: None,
        }
    }

    pub fn with_jacobian(
        mut self,
        jacobian: impl Fn(&[f64], &mut DMatrix<f64>) + Send + Sync + 'static,
    ) -> Self {
        self.jacobian = Some(Arc::new(jacobian));
        self
    }

    /// `f(w) = A w`.
    pub fn linear(a: DMatrix<f64>) -> Self {
        assert!(a.is_square(), "linear field needs a square matrix");
        let dim = a.nrows();
        let a_eval = a.clone();
        Self::new(dim, move |w, out| {
            for (i, o) in out.iter_mut().enumerate() {
                *o = (0..dim).map(|j| a_eval[(i, j)] * w[j]).sum();
            }
        })
        .with_jacobian(move |_, jac| jac.copy_from(&a))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has_analytic_jacobian(&self) -> bool {
        self.jacobian.is_some()
    }

    pub fn eval_into(&self, w: &[f64], out: &mut [f64]) {
        debug_assert_eq!(w.len(), self.dim);
        (self.eval)(w, out)
    }

    pub fn eval(&self, w: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        self.eval_into(w, &mut out);
        out
    }

    /// Analytic Jacobian when available, otherwise central differences with
    /// step `FD_STEP·max(1, |w_j|)`, switched to forward differences where the
    /// backward point would leave the orthant.
    pub fn jacobian(&self, w: &[f64]) -> Result<DMatrix<f64>, FieldError> {
        if w.len() != self.dim {
            return Err(FieldError::DimensionMismatch {
                expected: self.dim,
                got: w.len(),
            });
        }
        let mut jac = DMatrix::zeros(self.dim, self.dim);
        match &self.jacobian {
            Some(j) => j(w, &mut jac),
            None => self.fd_jacobian(w, &mut jac),
        }
        if jac.iter().all(|x| x.is_finite()) {
            Ok(jac)
        } else {
            Err(FieldError::NonFiniteJacobian { point: w.to_vec() })
        }
    }

    fn fd_jacobian(&self, w: &[f64], jac: &mut DMatrix<f64>) {
        let d = self.dim;
        let mut x = w.to_vec();
        let mut hi = vec![0.0; d];
        let mut lo = vec![0.0; d];
        for j in 0..d {
            let h = FD_STEP * w[j].abs().max(1.0);
            let central = w[j] - h >= 0.0 || w[j] < 0.0;
            x[j] = w[j] + h;
            self.eval_into(&x, &mut hi);
            let width = if central {
                x[j] = w[j] - h;
                2.0 * h
            } else {
                x[j] = w[j];
                h
            };
            self.eval_into(&x, &mut lo);
            x[j] = w[j];
            for i in 0..d {
                jac[(i, j)] = (hi[i] - lo[i]) / width;
            }
        }
    }

    /// Evaluates `f(max(w, 0))`. Keeps fields with square roots defined when
    /// a numerical trajectory dips slightly below zero.
    pub fn clamped_to_orthant(&self) -> Self {
        let inner = self.clone();
        let dim = self.dim;
        let eval = move |w: &[f64], out: &mut [f64]| {
            if w.iter().all(|&x| x >= 0.0) {
                inner.eval_into(w, out);
            } else {
                let clamped: Vec<f64> = w.iter().map(|&x| x.max(0.0)).collect();
                inner.eval_into(&clamped, out);
            }
        };
        let mut field = Self::new(dim, eval);
        if let Some(j) = &self.jacobian {
            let j = Arc::clone(j);
            field = field.with_jacobian(move |w, jac| {
                let clamped: Vec<f64> = w.iter().map(|&x| x.max(0.0)).collect();
                j(&clamped, jac)
            });
        }
        field
    }
}

/// Strictly positive weights `v` defining `‖w‖_v = max_i |w_i| / v_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(v: Vec<f64>) -> Result<Self, FieldError> {
        if v.is_empty() {
            return Err(FieldError::InvalidArgument("empty weight vector".into()));
        }
        if let Some((index, &value)) = v
            .iter()
            .enumerate()
            .find(|(_, &x)| !(x > 0.0 && x.is_finite()))
        {
            return Err(FieldError::NonPositiveWeight { index, value });
        }
        Ok(Self(v))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Copy rescaled so that its largest entry is 1.
    pub fn normalized(&self) -> Self {
        let top = self.0.iter().cloned().fold(0.0, f64::max);
        Self(self.0.iter().map(|x| x / top).collect())
    }
}

/// `max_i |w_i| / v_i`.
pub fn weighted_norm(w: &[f64], v: &WeightVector) -> Result<f64, FieldError> {
    if w.len() != v.dim() {
        return Err(FieldError::DimensionMismatch {
            expected: v.dim(),
            got: w.len(),
        });
    }
    Ok(w.iter()
        .zip(v.as_slice())
        .map(|(x, vi)| x.abs() / vi)
        .fold(0.0, f64::max))
}
