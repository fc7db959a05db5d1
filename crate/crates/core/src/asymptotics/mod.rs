//! Closed-form asymptotic distribution of the relative edge densities for
//! uniform data on a triangle.
//!
//! For the reflexivity (AND) and underlying (OR) graphs of the
//! proportional-edge PCD with expansion parameter r, uniform samples admit
//! closed-form asymptotic edge probabilities p(r), kernel variances
//! Var[h12(r)] and kernel covariances nu(r) = Cov[h12(r), h13(r)]. The scaled
//! density sqrt(n)(rho - p(r)) is asymptotically normal with variance 4 nu(r)
//! where the covariance is positive; the AND case degenerates at r in
//! {1, inf}, the OR case at r = inf.
//!
//! One transcription slip in the AND covariance table is restored here: the
//! piece on [4/3, (6+sqrt(15))/7) equals the piece on [(6+sqrt(15))/7, 3/2),
//! not its left neighbor. The restored assembly is exactly continuous at
//! every breakpoint and matches an independent numerical-integration oracle
//! on every interval interior (see the tests).

mod piecewise;
mod tables;

use serde::Serialize;

use crate::graphs::EdgeKind;
use crate::{Error, Result};
pub use piecewise::{PiecewiseRational, Surd};

/// The edge probability curve p_and(r) or p_or(r).
pub fn mean_curve(kind: EdgeKind) -> PiecewiseRational {
    let pieces = match kind {
        EdgeKind::And => &tables::MEAN_AND,
        EdgeKind::Or => &tables::MEAN_OR,
    };
    PiecewiseRational { breakpoints: &tables::MEAN_BREAKPOINTS, pieces }
}

/// The kernel variance curve Var[h12(r)].
pub fn var_curve(kind: EdgeKind) -> PiecewiseRational {
    let pieces = match kind {
        EdgeKind::And => &tables::VAR_AND,
        EdgeKind::Or => &tables::VAR_OR,
    };
    PiecewiseRational { breakpoints: &tables::MEAN_BREAKPOINTS, pieces }
}

/// The kernel covariance curve nu(r) = Cov[h12(r), h13(r)].
pub fn cov_curve(kind: EdgeKind) -> PiecewiseRational {
    let pieces = match kind {
        EdgeKind::And => &tables::COV_AND,
        EdgeKind::Or => &tables::COV_OR,
    };
    PiecewiseRational { breakpoints: &tables::COV_BREAKPOINTS, pieces }
}

fn check_r(r: f64) -> Result<()> {
    if r.is_nan() || r < 1.0 {
        return Err(Error::DomainError(format!("expansion parameter must be >= 1, got {r}")));
    }
    Ok(())
}

/// Asymptotic edge probability of the reflexivity graph; 1 at r = inf.
pub fn mean_and(r: f64) -> Result<f64> {
    check_r(r)?;
    Ok(if r.is_infinite() { 1.0 } else { mean_curve(EdgeKind::And).eval(r) })
}

/// Asymptotic edge probability of the underlying graph; 1 at r = inf.
pub fn mean_or(r: f64) -> Result<f64> {
    check_r(r)?;
    Ok(if r.is_infinite() { 1.0 } else { mean_curve(EdgeKind::Or).eval(r) })
}

pub fn mean(r: f64, kind: EdgeKind) -> Result<f64> {
    match kind {
        EdgeKind::And => mean_and(r),
        EdgeKind::Or => mean_or(r),
    }
}

/// Variance of the AND edge kernel; equals p_and(r)(1 - p_and(r)).
pub fn var_kernel_and(r: f64) -> Result<f64> {
    check_r(r)?;
    Ok(if r.is_infinite() { 0.0 } else { var_curve(EdgeKind::And).eval(r) })
}

/// Variance of the OR edge kernel; equals p_or(r)(1 - p_or(r)).
pub fn var_kernel_or(r: f64) -> Result<f64> {
    check_r(r)?;
    Ok(if r.is_infinite() { 0.0 } else { var_curve(EdgeKind::Or).eval(r) })
}

pub fn var_kernel(r: f64, kind: EdgeKind) -> Result<f64> {
    match kind {
        EdgeKind::And => var_kernel_and(r),
        EdgeKind::Or => var_kernel_or(r),
    }
}

/// Covariance nu_and(r) of the AND kernels over a shared point.
pub fn cov_kernel_and(r: f64) -> Result<f64> {
    check_r(r)?;
    Ok(if r.is_infinite() { 0.0 } else { cov_curve(EdgeKind::And).eval(r) })
}

/// Covariance nu_or(r) of the OR kernels over a shared point.
pub fn cov_kernel_or(r: f64) -> Result<f64> {
    check_r(r)?;
    Ok(if r.is_infinite() { 0.0 } else { cov_curve(EdgeKind::Or).eval(r) })
}

pub fn cov_kernel(r: f64, kind: EdgeKind) -> Result<f64> {
    match kind {
        EdgeKind::And => cov_kernel_and(r),
        EdgeKind::Or => cov_kernel_or(r),
    }
}

/// Exact finite-sample variance of the relative edge density:
/// `2/(n(n-1)) Var[h12] + 4(n-2)/(n(n-1)) Cov[h12, h13]`.
pub fn finite_sample_variance(n: usize, r: f64, kind: EdgeKind) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, got: n });
    }
    let var = var_kernel(r, kind)?;
    let cov = cov_kernel(r, kind)?;
    let nf = n as f64;
    Ok(2.0 / (nf * (nf - 1.0)) * var + 4.0 * (nf - 2.0) / (nf * (nf - 1.0)) * cov)
}

/// Parameters of the normal approximation of the relative edge density.
#[derive(Copy, Clone, Debug, Serialize)]
pub struct AsymptoticParams {
    pub kind: EdgeKind,
    pub r: f64,
    pub n: usize,
    /// Asymptotic mean p(r).
    pub mean: f64,
    /// Asymptotic variance of sqrt(n)-scaled density: 4 nu(r).
    pub scaled_variance: f64,
    /// Approximating normal variance 4 nu(r) / n.
    pub variance: f64,
}

/// Normal approximation `rho ~ N(p(r), 4 nu(r)/n)`.
///
/// Degenerate limits are refused: AND at r in {1, inf}, OR at r = inf.
pub fn normal_params(n: usize, r: f64, kind: EdgeKind) -> Result<AsymptoticParams> {
    check_r(r)?;
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, got: n });
    }
    if r.is_infinite() {
        return Err(Error::DegenerateLimit("density is 1 a.s. at r = inf".into()));
    }
    if kind == EdgeKind::And && r == 1.0 {
        return Err(Error::DegenerateLimit("AND density is 0 a.s. at r = 1".into()));
    }
    let mean = mean(r, kind)?;
    let scaled_variance = 4.0 * cov_kernel(r, kind)?;
    Ok(AsymptoticParams { kind, r, n, mean, scaled_variance, variance: scaled_variance / n as f64 })
}

/// Version of the multi-triangle density a parameter set belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MultiVersion {
    /// Normalized by all pairs n(n-1)/2.
    I,
    /// Normalized by within-triangle pairs n_t.
    II,
}

/// Asymptotic parameters for the multi-triangle densities, conditional on the
/// triangulation through its area weights.
#[derive(Clone, Debug, Serialize)]
pub struct MultiTriangleParams {
    pub kind: EdgeKind,
    pub version: MultiVersion,
    pub r: f64,
    pub sum_w2: f64,
    pub sum_w3: f64,
    /// Asymptotic mean of the density.
    pub mean: f64,
    /// Covariance term nu of the version.
    pub nu: f64,
    /// Asymptotic variance of the sqrt(n)-scaled density: 4 nu.
    pub scaled_variance: f64,
}

fn weight_sums(weights: &[f64]) -> Result<(f64, f64)> {
    if weights.is_empty() {
        return Err(Error::InvalidWeights("empty weight vector".into()));
    }
    if weights.iter().any(|&w| !w.is_finite() || w < 0.0) {
        return Err(Error::InvalidWeights("weights must be finite and nonnegative".into()));
    }
    let s: f64 = weights.iter().sum();
    if (s - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidWeights(format!("weights sum to {s}, expected 1")));
    }
    let w2 = weights.iter().map(|w| w * w).sum();
    let w3 = weights.iter().map(|w| w * w * w).sum();
    Ok((w2, w3))
}

/// Version-I parameters: mean `p(r) * sum w_i^2`, covariance
/// `nu(r) sum w_i^3 + p(r)^2 (sum w_i^3 - (sum w_i^2)^2)`.
pub fn multi_triangle_params_i(
    weights: &[f64],
    r: f64,
    kind: EdgeKind,
) -> Result<MultiTriangleParams> {
    check_r(r)?;
    let (sum_w2, sum_w3) = weight_sums(weights)?;
    let p = mean(r, kind)?;
    let nu_single = cov_kernel(r, kind)?;
    let nu = nu_single * sum_w3 + p * p * (sum_w3 - sum_w2 * sum_w2);
    Ok(MultiTriangleParams {
        kind,
        version: MultiVersion::I,
        r,
        sum_w2,
        sum_w3,
        mean: p * sum_w2,
        nu,
        scaled_variance: 4.0 * nu,
    })
}

/// Version-II parameters: mean `p(r)`, covariance
/// `nu(r) sum w_i^3 / (sum w_i^2)^2`.
pub fn multi_triangle_params_ii(
    weights: &[f64],
    r: f64,
    kind: EdgeKind,
) -> Result<MultiTriangleParams> {
    check_r(r)?;
    let (sum_w2, sum_w3) = weight_sums(weights)?;
    let p = mean(r, kind)?;
    let nu = cov_kernel(r, kind)? * sum_w3 / (sum_w2 * sum_w2);
    Ok(MultiTriangleParams {
        kind,
        version: MultiVersion::II,
        r,
        sum_w2,
        sum_w3,
        mean: p,
        nu,
        scaled_variance: 4.0 * nu,
    })
}
