//! Small statistics helpers shared across modules: type-7 quantiles,
//! mean/CI aggregation, Wilson intervals for proportions near 0/1, and
//! sampling from possibly-singular Gaussian covariances.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// z value for two-sided 95% intervals.
pub const Z95: f64 = 1.959_963_984_540_054;

/// Quantile by linear interpolation of order statistics (type 7, the
/// default of most statistics packages). `values` need not be sorted.
/// Returns `None` on an empty slice.
pub fn quantile_type7(values: &[f64], p: f64) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("NaN in quantile input"));
    let p = p.clamp(0.0, 1.0);
    let h = (v.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if lo + 1 >= v.len() {
        Some(v[v.len() - 1])
    } else {
        Some(v[lo] + frac * (v[lo + 1] - v[lo]))
    }
}

pub fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    values.iter().sum::<f64>() / values.len() as f64
}

/// Unbiased sample standard deviation; 0 for fewer than two samples.
pub fn sample_std(values: &[f64]) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let m = mean(values);
    let ss: f64 = values.iter().map(|v| (v - m) * (v - m)).sum();
    (ss / (n - 1) as f64).sqrt()
}

/// Half-width of the 95% normal-approximation interval for a sample mean.
pub fn mean_ci_halfwidth(values: &[f64]) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    Z95 * sample_std(values) / (n as f64).sqrt()
}

/// 95% Wilson score interval for `successes` out of `n` trials.
pub fn wilson_interval(successes: usize, n: usize) -> (f64, f64) {
    assert!(n > 0, "wilson interval needs at least one trial");
    let nf = n as f64;
    let p = successes as f64 / nf;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / nf;
    let center = (p + z2 / (2.0 * nf)) / denom;
    let half = Z95 * (p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)).sqrt() / denom;
    let lo = if successes == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if successes == n { 1.0 } else { (center + half).min(1.0) };
    (lo, hi)
}

/// 95% half-width for a proportion: normal approximation in the interior,
/// Wilson when the point estimate sits at exactly 0 or 1.
pub fn proportion_ci_halfwidth(successes: usize, n: usize) -> f64 {
    assert!(n > 0, "proportion CI needs at least one trial");
    let nf = n as f64;
    let p = successes as f64 / nf;
    if successes == 0 || successes == n {
        let (lo, hi) = wilson_interval(successes, n);
        (hi - lo) / 2.0
    } else {
        Z95 * (p * (1.0 - p) / nf).sqrt()
    }
}

/// Square-root factor of a symmetric positive semi-definite covariance,
/// used to draw correlated Gaussian vectors. Built from the symmetric
/// eigendecomposition so that singular (including all-zero) covariances
/// are handled exactly.
#[derive(Debug, Clone)]
pub struct GaussianFactor {
    factor: DMatrix<f64>,
    dim: usize,
    zero: bool,
}

impl GaussianFactor {
    pub fn from_covariance(cov: &DMatrix<f64>) -> Result<Self> {
        if !cov.is_square() {
            return Err(Error::InvalidModel(format!(
                "covariance must be square, got {}x{}",
                cov.nrows(),
                cov.ncols()
            )));
        }
        if cov.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidModel(
                "covariance has non-finite entries".into(),
            ));
        }
        let dim = cov.nrows();
        let sym_tol = 1e-9 * (1.0 + cov.amax());
        for i in 0..dim {
            for j in (i + 1)..dim {
                if (cov[(i, j)] - cov[(j, i)]).abs() > sym_tol {
                    return Err(Error::InvalidModel(
                        "covariance is not symmetric".into(),
                    ));
                }
            }
        }
        if cov.amax() == 0.0 {
            return Ok(Self {
                factor: DMatrix::zeros(dim, dim),
                dim,
                zero: true,
            });
        }
        let eig = cov.clone().symmetric_eigen();
        let eig_tol = -1e-9 * (1.0 + cov.amax());
        if eig.eigenvalues.iter().any(|&l| l < eig_tol) {
            return Err(Error::InvalidModel(
                "covariance is not positive semi-definite".into(),
            ));
        }
        let sqrt_l = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| l.max(0.0).sqrt()));
        Ok(Self {
            factor: &eig.eigenvectors * sqrt_l,
            dim,
            zero: false,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Draw one vector ~ N(0, cov). The zero-covariance case consumes no
    /// randomness so traces stay comparable across noise settings.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> DVector<f64> {
        if self.zero {
            return DVector::zeros(self.dim);
        }
        let z = DVector::from_fn(self.dim, |_, _| rng.sample(StandardNormal));
        &self.factor * z
    }
}
