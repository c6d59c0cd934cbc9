//! Linear time-invariant plant dynamics with additive Gaussian disturbance.
//!
//! Continuous dynamics are discretized once (exact zero-order hold) and the
//! simulation then advances the state at a fixed step `dt`. Two benchmark
//! plants ship with the crate: a double integrator (marginally stable) and a
//! linearized inverted pendulum (unstable).

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stats::GaussianFactor;

/// Discrete-time LTI plant: `x' = A x + B u + w`, `y = C x + v`.
///
/// `A` and `B` are the per-step matrices produced by [`discretize`];
/// `disturbance_cov` and `measurement_noise_cov` are the per-step
/// covariances of `w` and `v`.
#[derive(Debug, Clone)]
pub struct PlantModel {
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
    pub c: DMatrix<f64>,
    pub disturbance_cov: DMatrix<f64>,
    pub measurement_noise_cov: DMatrix<f64>,
    pub dt: f64,
    disturbance_factor: GaussianFactor,
    noise_factor: GaussianFactor,
}

/// Plant state at a simulation instant.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantState {
    pub x: DVector<f64>,
    pub t: f64,
}

impl PlantState {
    pub fn new(x: DVector<f64>, t: f64) -> Result<Self> {
        if x.iter().any(|v| !v.is_finite()) || !t.is_finite() {
            return Err(Error::InvalidModel("plant state must be finite".into()));
        }
        Ok(Self { x, t })
    }
}

impl PlantModel {
    /// Build a discrete-time model, validating all invariants.
    pub fn new(
        a: DMatrix<f64>,
        b: DMatrix<f64>,
        c: DMatrix<f64>,
        disturbance_cov: DMatrix<f64>,
        measurement_noise_cov: DMatrix<f64>,
        dt: f64,
    ) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::InvalidModel(format!("dt must be positive, got {dt}")));
        }
        for (name, m) in [("A", &a), ("B", &b), ("C", &c)] {
            if m.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidModel(format!("matrix {name} has non-finite entries")));
            }
        }
        let n_x = a.nrows();
        if a.ncols() != n_x {
            return Err(Error::InvalidModel("A must be square".into()));
        }
        if b.nrows() != n_x {
            return Err(Error::InvalidModel("B row count must match A".into()));
        }
        if c.ncols() != n_x {
            return Err(Error::InvalidModel("C column count must match A".into()));
        }
        if disturbance_cov.nrows() != n_x {
            return Err(Error::InvalidModel(
                "disturbance covariance must be n_x x n_x".into(),
            ));
        }
        if measurement_noise_cov.nrows() != c.nrows() {
            return Err(Error::InvalidModel(
                "measurement noise covariance must be n_y x n_y".into(),
            ));
        }
        let disturbance_factor = GaussianFactor::from_covariance(&disturbance_cov)?;
        let noise_factor = GaussianFactor::from_covariance(&measurement_noise_cov)?;
        Ok(Self {
            a,
            b,
            c,
            disturbance_cov,
            measurement_noise_cov,
            dt,
            disturbance_factor,
            noise_factor,
        })
    }

    /// Discretize continuous dynamics, then build the model.
    pub fn from_continuous(
        a_cont: &DMatrix<f64>,
        b_cont: &DMatrix<f64>,
        c: DMatrix<f64>,
        disturbance_cov: DMatrix<f64>,
        measurement_noise_cov: DMatrix<f64>,
        dt: f64,
    ) -> Result<Self> {
        let (a, b) = discretize(a_cont, b_cont, dt)?;
        Self::new(a, b, c, disturbance_cov, measurement_noise_cov, dt)
    }

    pub fn n_states(&self) -> usize {
        self.a.nrows()
    }

    pub fn n_inputs(&self) -> usize {
        self.b.ncols()
    }

    pub fn n_outputs(&self) -> usize {
        self.c.nrows()
    }

    /// Per-step disturbance draw `w ~ N(0, disturbance_cov)`.
    pub fn sample_disturbance<R: rand::Rng>(&self, rng: &mut R) -> DVector<f64> {
        self.disturbance_factor.sample(rng)
    }

    /// Per-sample sensor noise draw `v ~ N(0, measurement_noise_cov)`.
    pub fn sample_measurement_noise<R: rand::Rng>(&self, rng: &mut R) -> DVector<f64> {
        self.noise_factor.sample(rng)
    }
}

/// Exact zero-order-hold discretization of `dx/dt = A x + B u`.
///
/// Computes the matrix exponential of the augmented block matrix
/// `[[A, B], [0, 0]] * dt`; the top blocks of the result are `(A_d, B_d)`.
pub fn discretize(
    a: &DMatrix<f64>,
    b: &DMatrix<f64>,
    dt: f64,
) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::InvalidModel(format!("dt must be positive, got {dt}")));
    }
    if a.iter().chain(b.iter()).any(|v| !v.is_finite()) {
        return Err(Error::InvalidModel(
            "continuous matrices have non-finite entries".into(),
        ));
    }
    let n = a.nrows();
    let m = b.ncols();
    if a.ncols() != n {
        return Err(Error::InvalidModel("A must be square".into()));
    }
    if b.nrows() != n {
        return Err(Error::InvalidModel("B row count must match A".into()));
    }
    let mut aug = DMatrix::zeros(n + m, n + m);
    aug.view_mut((0, 0), (n, n)).copy_from(&(a * dt));
    aug.view_mut((0, n), (n, m)).copy_from(&(b * dt));
    let exp = aug.exp();
    let a_d = exp.view((0, 0), (n, n)).into_owned();
    let b_d = exp.view((0, n), (n, m)).into_owned();
    Ok((a_d, b_d))
}

/// One simulation step: `x' = A x + B u + w`, `t' = t + dt`.
pub fn step(
    model: &PlantModel,
    state: &PlantState,
    u: &DVector<f64>,
    w: &DVector<f64>,
) -> Result<PlantState> {
    if u.len() != model.n_inputs() {
        return Err(Error::Dimension {
            what: "plant input",
            expected: model.n_inputs(),
            got: u.len(),
        });
    }
    if w.len() != model.n_states() {
        return Err(Error::Dimension {
            what: "plant disturbance",
            expected: model.n_states(),
            got: w.len(),
        });
    }
    if state.x.len() != model.n_states() {
        return Err(Error::Dimension {
            what: "plant state",
            expected: model.n_states(),
            got: state.x.len(),
        });
    }
    Ok(PlantState {
        x: &model.a * &state.x + &model.b * u + w,
        t: state.t + model.dt,
    })
}

/// Sensor reading `y = C x + v`.
pub fn measure(model: &PlantModel, state: &PlantState, v: &DVector<f64>) -> Result<DVector<f64>> {
    if v.len() != model.n_outputs() {
        return Err(Error::Dimension {
            what: "measurement noise",
            expected: model.n_outputs(),
            got: v.len(),
        });
    }
    Ok(&model.c * &state.x + v)
}

/// Continuous-time matrices of the shipped benchmark plants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchmarkPlant {
    /// Position/velocity double integrator, force input.
    DoubleIntegrator,
    /// Pendulum linearized about the upright equilibrium
    /// (g = 9.81 m/s^2, unit length and mass), torque input.
    InvertedPendulum,
}

impl BenchmarkPlant {
    pub fn continuous_matrices(self) -> (DMatrix<f64>, DMatrix<f64>) {
        match self {
            BenchmarkPlant::DoubleIntegrator => (
                DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]),
                DMatrix::from_row_slice(2, 1, &[0.0, 1.0]),
            ),
            BenchmarkPlant::InvertedPendulum => (
                DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 9.81, 0.0]),
                DMatrix::from_row_slice(2, 1, &[0.0, 1.0]),
            ),
        }
    }

    /// Discretized benchmark with full-state observation and diagonal noise.
    pub fn model(self, dt: f64, disturbance_std: f64, noise_std: f64) -> Result<PlantModel> {
        let (a, b) = self.continuous_matrices();
        let n = a.nrows();
        PlantModel::from_continuous(
            &a,
            &b,
            DMatrix::identity(n, n),
            DMatrix::identity(n, n) * disturbance_std * disturbance_std,
            DMatrix::identity(n, n) * noise_std * noise_std,
            dt,
        )
    }
}
