//! Complete-spatial-randomness test from relative edge density.
//!
//! Under the null the sample is uniform on the convex hull of the anchors;
//! the version-I edge density is then approximately normal with the
//! closed-form parameters conditional on the realized triangulation. Points
//! far from every anchor get large proximity regions, so segregation (points
//! avoid the anchors) inflates the density toward the upper tail, while
//! association (points cluster at the anchors) starves it toward the lower
//! tail.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::asymptotics::multi_triangle_params_i;
use crate::geometry::{Point2, Triangulation};
use crate::graphs::{EdgeKind, OutsidePolicy, PcdInstance};
use crate::montecarlo::{replicate_rng, sample_point_in_triangle, sample_uniform_hull};
use crate::mtdensity::multi_density;
use crate::proximity::Expansion;
use crate::{Error, Result};

/// Options for [`csr_test`].
#[derive(Copy, Clone, Debug, Default)]
pub struct CsrTestOptions {
    /// Attempt the AND test at r = 1. Its null variance rests entirely on
    /// the weight-dispersion term, which vanishes together with the mean, so
    /// the attempt still fails with a degenerate limit unless that term is
    /// positive.
    pub allow_and_r1: bool,
}

/// Result of the CSR test.
#[derive(Clone, Debug, Serialize)]
pub struct CsrTestResult {
    pub kind: EdgeKind,
    pub r: f64,
    /// Retained sample size.
    pub n: usize,
    /// Anchor count.
    pub m: usize,
    pub excluded: usize,
    /// Observed version-I edge density.
    pub observed: f64,
    pub null_mean: f64,
    /// Null variance of the observed density: 4 nu_tilde / n.
    pub null_variance: f64,
    pub z: f64,
    pub p_lower: f64,
    pub p_upper: f64,
    pub p_two_sided: f64,
}

/// Test CSR of `x_points` with respect to `y_anchors` at expansion `r`.
pub fn csr_test(
    x_points: &[Point2],
    y_anchors: &[Point2],
    r: Expansion,
    kind: EdgeKind,
    opts: CsrTestOptions,
) -> Result<CsrTestResult> {
    if y_anchors.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "need at least 3 anchors, got {}",
            y_anchors.len()
        )));
    }
    if r.is_infinite() {
        return Err(Error::DegenerateLimit("density is 1 a.s. at r = inf".into()));
    }
    if kind == EdgeKind::And && r.value() == 1.0 && !opts.allow_and_r1 {
        return Err(Error::DegenerateLimit(
            "AND density at r = 1 degenerates; pass allow_and_r1 to attempt anyway".into(),
        ));
    }
    let (instance, dropped) =
        PcdInstance::build(y_anchors, x_points, r, OutsidePolicy::Drop)?;
    let n = instance.n();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, got: n });
    }
    let report = multi_density(&instance, kind)?;
    let params = multi_triangle_params_i(&instance.weights(), r.value(), kind)?;
    let null_variance = params.scaled_variance / n as f64;
    if null_variance <= 0.0 {
        return Err(Error::DegenerateLimit("null variance is zero".into()));
    }
    let z = (report.rho_i - params.mean) / null_variance.sqrt();
    let normal = Normal::new(0.0, 1.0).expect("standard normal");
    let p_lower = normal.cdf(z);
    let p_upper = 1.0 - p_lower;
    Ok(CsrTestResult {
        kind,
        r: r.value(),
        n,
        m: y_anchors.len(),
        excluded: dropped.len(),
        observed: report.rho_i,
        null_mean: params.mean,
        null_variance,
        z,
        p_lower,
        p_upper,
        p_two_sided: (2.0 * p_lower.min(p_upper)).min(1.0),
    })
}

/// Alternative patterns for the power harness.
#[derive(Copy, Clone, Debug, Serialize)]
pub enum Scenario {
    /// Uniform on the hull (the null).
    Csr,
    /// Points confined to each triangle shrunk about its centroid by
    /// `1 - delta`; larger delta pushes points away from the anchors.
    Segregation { delta: f64 },
    /// Points accepted only within barycentric distance `delta` of some
    /// anchor vertex of their triangle.
    Association { delta: f64 },
}

impl Scenario {
    /// Draw `n` points under this scenario on the given triangulation.
    pub fn sample_points<R: Rng>(
        &self,
        triangulation: &Triangulation,
        n: usize,
        rng: &mut R,
    ) -> Vec<Point2> {
        match *self {
            Scenario::Csr => sample_uniform_hull(triangulation, n, rng).0,
            Scenario::Segregation { delta } => {
                let shrunk: Vec<_> = (0..triangulation.triangles.len())
                    .map(|i| {
                        let t = triangulation.triangle(i);
                        let c = t.centroid();
                        let v = t.vertices().map(|p| {
                            Point2::new(
                                c.x + (1.0 - delta) * (p.x - c.x),
                                c.y + (1.0 - delta) * (p.y - c.y),
                            )
                        });
                        crate::geometry::Triangle::new(v[0], v[1], v[2]).expect("shrunk triangle")
                    })
                    .collect();
                let areas = triangulation.areas();
                let total: f64 = areas.iter().sum();
                let mut cum = Vec::with_capacity(areas.len());
                let mut acc = 0.0;
                for a in &areas {
                    acc += a / total;
                    cum.push(acc);
                }
                (0..n)
                    .map(|_| {
                        let u: f64 = rng.gen();
                        let t = cum.partition_point(|&c| c < u).min(shrunk.len() - 1);
                        sample_point_in_triangle(&shrunk[t], rng)
                    })
                    .collect()
            }
            Scenario::Association { delta } => {
                let mut out = Vec::with_capacity(n);
                let mut guard = 0usize;
                while out.len() < n {
                    guard += 1;
                    if guard > 10_000 * n {
                        // fill the remainder uniformly rather than spin
                        out.extend(sample_uniform_hull(triangulation, n - out.len(), rng).0);
                        break;
                    }
                    let (pts, assignment) = sample_uniform_hull(triangulation, 1, rng);
                    let tri = triangulation.triangle(assignment[0]);
                    let b = tri.barycentric(pts[0]);
                    let closest = 1.0 - b.as_array()[b.argmax()];
                    if closest <= delta {
                        out.push(pts[0]);
                    }
                }
                out
            }
        }
    }
}

/// One row of a power table.
#[derive(Clone, Debug, Serialize)]
pub struct PowerRow {
    pub r: f64,
    pub scenario: Scenario,
    pub replicates: usize,
    pub rejections: usize,
    pub rejection_rate: f64,
    /// Binomial standard error of the rate.
    pub se: f64,
}

/// Configuration of a power study.
#[derive(Clone, Debug)]
pub struct PowerConfig {
    pub r_grid: Vec<f64>,
    /// Sample size per replicate.
    pub n: usize,
    pub replicates: usize,
    /// Two-sided rejection level.
    pub alpha: f64,
    pub kind: EdgeKind,
    pub seed: u64,
}

/// Empirical rejection rate of the two-sided CSR test over seeded replicates.
pub fn power_curve(
    y_anchors: &[Point2],
    scenario: Scenario,
    cfg: &PowerConfig,
) -> Result<Vec<PowerRow>> {
    let PowerConfig { ref r_grid, n, replicates, alpha, kind, seed } = *cfg;
    let mut rows = Vec::with_capacity(r_grid.len());
    for (gi, &r) in r_grid.iter().enumerate() {
        let expansion = Expansion::new(r)?;
        let triangulation = if y_anchors.len() == 3 {
            Triangulation::single(&crate::geometry::Triangle::new(
                y_anchors[0],
                y_anchors[1],
                y_anchors[2],
            )?)
        } else {
            crate::geometry::delaunay(y_anchors)?
        };
        let rejections: usize = (0..replicates)
            .into_par_iter()
            .map(|rep| {
                let mut rng = replicate_rng(seed, (gi * replicates + rep) as u64);
                let xs = scenario.sample_points(&triangulation, n, &mut rng);
                match csr_test(&xs, y_anchors, expansion, kind, CsrTestOptions::default()) {
                    Ok(res) => (res.p_two_sided < alpha) as usize,
                    Err(_) => 0,
                }
            })
            .sum();
        let rate = rejections as f64 / replicates as f64;
        rows.push(PowerRow {
            r,
            scenario,
            replicates,
            rejections,
            rejection_rate: rate,
            se: (rate * (1.0 - rate) / replicates as f64).sqrt(),
        });
    }
    Ok(rows)
}
