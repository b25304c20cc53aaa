//! The three reference systems: two homogeneous cooperative systems that
//! decay to the origin and a two-species Kolmogorov system.

use nalgebra::DMatrix;

use crate::field::{VectorField, WeightVector};
use crate::solver::MultiOrder;

/// Text form of the first reference field, in the `.field` format.
pub const EXAMPLE_ONE_FIELD: &str = "\
# degree 3/2, cooperative on the open orthant
dim = 2
f1 = -3*sqrt(w1^3) + 2*w1*sqrt(w2)
f2 = sqrt(w1)*w2 - 4*sqrt(w2^3)
";

pub const EXAMPLE_TWO_FIELD: &str = "\
# degree 1
dim = 3
f1 = -w1 + w2 + w3
f2 = sqrt(w1^2 + w3^2) - 4*w2
f3 = w1 + sqrt(w2^2 + w3^2) - 5*w3
";

/// Interaction part `f` of the Kolmogorov system `diag(w)(b + f(w))`.
pub const EXAMPLE_THREE_INTERACTION: &str = "\
dim = 2
f1 = -3*w1 + w2
f2 = w1 - w2
";

/// `(−3 w1^{3/2} + 2 w1 √w2, √w1 w2 − 4 w2^{3/2})`.
pub fn example_one_field() -> VectorField {
    VectorField::new(2, |w, out| {
        let (s1, s2) = (w[0].sqrt(), w[1].sqrt());
        out[0] = -3.0 * w[0] * s1 + 2.0 * w[0] * s2;
        out[1] = s1 * w[1] - 4.0 * w[1] * s2;
    })
    .with_jacobian(|w, jac| {
        let (s1, s2) = (w[0].sqrt(), w[1].sqrt());
        jac[(0, 0)] = -4.5 * s1 + 2.0 * s2;
        jac[(0, 1)] = w[0] / s2;
        jac[(1, 0)] = 0.5 * w[1] / s1;
        jac[(1, 1)] = s1 - 6.0 * s2;
    })
}

/// `(−w1 + w2 + w3, |(w1, w3)| − 4 w2, w1 + |(w2, w3)| − 5 w3)`.
pub fn example_two_field() -> VectorField {
    VectorField::new(3, |w, out| {
        out[0] = -w[0] + w[1] + w[2];
        out[1] = w[0].hypot(w[2]) - 4.0 * w[1];
        out[2] = w[0] + w[1].hypot(w[2]) - 5.0 * w[2];
    })
    .with_jacobian(|w, jac| {
        let unit = |a: f64, r: f64| if r > 0.0 { a / r } else { 0.0 };
        let r13 = w[0].hypot(w[2]);
        let r23 = w[1].hypot(w[2]);
        jac.copy_from_slice(&[
            -1.0,
            unit(w[0], r13),
            1.0,
            1.0,
            -4.0,
            unit(w[1], r23),
            1.0,
            unit(w[2], r13),
            unit(w[2], r23) - 5.0,
        ]);
    })
}

/// Linear interaction `(−3 w1 + w2, w1 − w2)`.
pub fn example_three_interaction() -> VectorField {
    VectorField::linear(DMatrix::from_row_slice(2, 2, &[-3.0, 1.0, 1.0, -1.0]))
}

/// What a reference system is meant to demonstrate.
#[derive(Debug, Clone)]
pub enum SystemKind {
    /// Decay to the origin at the rate of a Mittag-Leffler envelope.
    Attractive { v: WeightVector, degree: f64 },
    /// Convergence to the positive equilibrium of `diag(w)(b + f(w))`.
    Kolmogorov {
        rates: Vec<f64>,
        interaction: VectorField,
        guess: Vec<f64>,
        expected: Vec<f64>,
    },
}

#[derive(Debug, Clone)]
pub struct ReferenceSystem {
    pub id: u8,
    pub title: &'static str,
    /// Right-hand side integrated by the solver.
    pub field: VectorField,
    pub orders: MultiOrder,
    pub omega: Vec<f64>,
    pub kind: SystemKind,
}

impl ReferenceSystem {
    pub fn dim(&self) -> usize {
        self.omega.len()
    }
}

/// Reference system `1`, `2` or `3`.
pub fn example(id: u8) -> Option<ReferenceSystem> {
    let sys = match id {
        1 => ReferenceSystem {
            id,
            title: "two-dimensional system of degree 3/2",
            field: example_one_field(),
            orders: MultiOrder::new(vec![0.24, 0.55]).ok()?,
            omega: vec![0.7, 0.2],
            kind: SystemKind::Attractive {
                v: WeightVector::new(vec![1.0, 1.0]).ok()?,
                degree: 1.5,
            },
        },
        2 => ReferenceSystem {
            id,
            title: "three-dimensional system of degree 1",
            field: example_two_field(),
            orders: MultiOrder::uniform(0.45, 3).ok()?,
            omega: vec![0.5, 0.3, 0.8],
            kind: SystemKind::Attractive {
                v: WeightVector::new(vec![3.0, 1.0, 1.0]).ok()?,
                degree: 1.0,
            },
        },
        3 => {
            let interaction = example_three_interaction();
            let rates = vec![1.0, 1.0];
            let (b, f) = (rates.clone(), interaction.clone());
            let mut field = VectorField::new(2, move |w, out| {
                f.eval_into(w, out);
                for i in 0..2 {
                    out[i] = w[i] * (b[i] + out[i]);
                }
            });
            let (b, f) = (rates.clone(), interaction.clone());
            field = field.with_jacobian(move |w, jac| {
                let fw = f.eval(w);
                let jf = f.jacobian(w).expect("linear Jacobian is finite");
                for i in 0..2 {
                    for j in 0..2 {
                        jac[(i, j)] = w[i] * jf[(i, j)];
                    }
                    jac[(i, i)] += b[i] + fw[i];
                }
            });
            ReferenceSystem {
                id,
                title: "Kolmogorov system with equilibrium (1, 2)",
                field,
                orders: MultiOrder::new(vec![0.4, 0.6]).ok()?,
                omega: vec![0.2, 2.3],
                kind: SystemKind::Kolmogorov {
                    rates,
                    interaction,
                    guess: vec![0.5, 0.5],
                    expected: vec![1.0, 2.0],
                },
            }
        }
        _ => return None,
    };
    Some(sys)
}
