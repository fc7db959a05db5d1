//! Seeded Monte Carlo: uniform sampling in triangles and triangulated hulls,
//! replication of the density statistics, and moment diagnostics.
//!
//! Reproducibility contract: every replicate draws from its own counter-based
//! stream derived from the master seed, so results are bit-identical for a
//! fixed seed no matter how many worker threads run the replicates.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::geometry::{Point2, Triangle, Triangulation};
use crate::graphs::{
    arc_density, edge_density, reflexivity_graph, underlying_graph, Kind, PcdInstance,
};
use crate::proximity::Expansion;
use crate::{Error, Result};

/// RNG for one replicate: an independent ChaCha stream per index.
pub fn replicate_rng(master_seed: u64, replicate: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(replicate);
    rng
}

/// One uniform draw from a triangle (square-root construction, no rejection).
pub fn sample_point_in_triangle<R: Rng>(tri: &Triangle, rng: &mut R) -> Point2 {
    let [a, b, c] = tri.vertices();
    let u: f64 = rng.gen();
    let v: f64 = rng.gen();
    let su = u.sqrt();
    let (wa, wb, wc) = (1.0 - su, su * (1.0 - v), su * v);
    Point2::new(
        wa * a.x + wb * b.x + wc * c.x,
        wa * a.y + wb * b.y + wc * c.y,
    )
}

/// `count` i.i.d. uniform points in a triangle.
pub fn sample_uniform_triangle<R: Rng>(tri: &Triangle, count: usize, rng: &mut R) -> Vec<Point2> {
    (0..count).map(|_| sample_point_in_triangle(tri, rng)).collect()
}

/// `count` i.i.d. uniform points in the triangulated hull: a triangle chosen
/// with probability proportional to its area, then a uniform point within.
/// Returns the points with their triangle assignments.
pub fn sample_uniform_hull<R: Rng>(
    triangulation: &Triangulation,
    count: usize,
    rng: &mut R,
) -> (Vec<Point2>, Vec<usize>) {
    let areas = triangulation.areas();
    let total: f64 = areas.iter().sum();
    let mut cum = Vec::with_capacity(areas.len());
    let mut acc = 0.0;
    for a in &areas {
        acc += a / total;
        cum.push(acc);
    }
    *cum.last_mut().unwrap() = 1.0;

    let mut pts = Vec::with_capacity(count);
    let mut assignment = Vec::with_capacity(count);
    for _ in 0..count {
        let u: f64 = rng.gen();
        let t = cum.partition_point(|&c| c < u).min(areas.len() - 1);
        let tri = triangulation.triangle(t);
        pts.push(sample_point_in_triangle(&tri, rng));
        assignment.push(t);
    }
    (pts, assignment)
}

/// Geometry the simulation runs on.
#[derive(Clone, Debug)]
pub enum Geometry {
    /// The standard equilateral triangle.
    Equilateral,
    Triangle(Triangle),
    /// Anchors to Delaunay-triangulate (3 anchors make a single triangle).
    Anchors(Vec<Point2>),
}

impl Geometry {
    pub fn triangulation(&self) -> Result<Triangulation> {
        match self {
            Geometry::Equilateral => Ok(Triangulation::single(&crate::geometry::equilateral())),
            Geometry::Triangle(t) => Ok(Triangulation::single(t)),
            Geometry::Anchors(a) => {
                if a.len() == 3 {
                    Ok(Triangulation::single(&Triangle::new(a[0], a[1], a[2])?))
                } else {
                    crate::geometry::delaunay(a)
                }
            }
        }
    }
}

/// Simulation configuration.
#[derive(Clone, Debug)]
pub struct SimConfig {
    pub geometry: Geometry,
    pub r: Expansion,
    /// Sample size per replicate.
    pub n: usize,
    pub replicates: usize,
    pub seed: u64,
    pub kinds: Vec<Kind>,
    /// Histogram bin override; Freedman-Diaconis when `None`.
    pub bins: Option<usize>,
}

/// Aggregated output of one statistic across replicates.
#[derive(Clone, Debug, Serialize)]
pub struct ReplicateStats {
    pub kind: Kind,
    pub values: Vec<f64>,
    pub moments: MomentReport,
    pub histogram: Histogram,
}

#[derive(Clone, Debug, Serialize)]
pub struct MomentReport {
    pub count: usize,
    pub mean: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    pub skewness: f64,
    pub excess_kurtosis: f64,
    /// KS distance against the reference normal; NaN when the sample or the
    /// reference is degenerate.
    pub ks_normal: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

/// Sample moments plus a KS distance against N(mean, variance) or a supplied
/// reference normal.
pub fn moment_report(values: &[f64], reference: Option<(f64, f64)>) -> Result<MomentReport> {
    let n = values.len();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, got: n });
    }
    let nf = n as f64;
    let mean = values.iter().sum::<f64>() / nf;
    let m2 = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / nf;
    let m3 = values.iter().map(|v| (v - mean).powi(3)).sum::<f64>() / nf;
    let m4 = values.iter().map(|v| (v - mean).powi(4)).sum::<f64>() / nf;
    let variance = m2 * nf / (nf - 1.0);
    let (skewness, excess_kurtosis) = if m2 > 0.0 {
        (m3 / m2.powf(1.5), m4 / (m2 * m2) - 3.0)
    } else {
        (f64::NAN, f64::NAN)
    };
    let (rm, rv) = reference.unwrap_or((mean, variance));
    let ks_normal = if rv > 0.0 { ks_distance_normal(values, rm, rv) } else { f64::NAN };
    Ok(MomentReport { count: n, mean, variance, skewness, excess_kurtosis, ks_normal })
}

/// Kolmogorov-Smirnov distance of a sample against N(mean, variance).
pub fn ks_distance_normal(values: &[f64], mean: f64, variance: f64) -> f64 {
    use statrs::distribution::{ContinuousCDF, Normal};
    let normal = Normal::new(mean, variance.sqrt()).expect("positive variance");
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &v) in sorted.iter().enumerate() {
        let f = normal.cdf(v);
        d = d.max((f - i as f64 / n).abs()).max(((i as f64 + 1.0) / n - f).abs());
    }
    d
}

/// Freedman-Diaconis histogram (fallback to a single bin for constant data).
pub fn histogram(values: &[f64], bins: Option<usize>) -> Histogram {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len();
    let (lo, hi) = (sorted[0], sorted[n - 1]);
    let nbins = bins.unwrap_or_else(|| {
        let q1 = sorted[n / 4];
        let q3 = sorted[(3 * n) / 4];
        let iqr = q3 - q1;
        if iqr <= 0.0 || hi <= lo {
            1
        } else {
            let width = 2.0 * iqr / (n as f64).cbrt();
            (((hi - lo) / width).ceil() as usize).clamp(1, 10_000)
        }
    });
    let span = if hi > lo { hi - lo } else { 1.0 };
    let edges: Vec<f64> =
        (0..=nbins).map(|k| lo + span * k as f64 / nbins as f64).collect();
    let mut counts = vec![0u64; nbins];
    for &v in values {
        let k = (((v - lo) / span * nbins as f64) as usize).min(nbins - 1);
        counts[k] += 1;
    }
    Histogram { edges, counts }
}

/// Density values of one replicate, in `kinds` order.
fn replicate_densities(
    triangulation: &Triangulation,
    r: Expansion,
    n: usize,
    kinds: &[Kind],
    rng: &mut ChaCha8Rng,
) -> Vec<f64> {
    let single = triangulation.triangles.len() == 1;
    let (pts, assignment) = if single {
        let tri = triangulation.triangle(0);
        (sample_uniform_triangle(&tri, n, rng), vec![0; n])
    } else {
        sample_uniform_hull(triangulation, n, rng)
    };
    let inst = PcdInstance::from_parts(triangulation.clone(), pts, r, assignment);
    let d = inst.adjacency();
    kinds
        .iter()
        .map(|k| match k {
            Kind::Arc => arc_density(&d).expect("n >= 2"),
            Kind::And => edge_density(&reflexivity_graph(&d)).expect("n >= 2"),
            Kind::Or => edge_density(&underlying_graph(&d)).expect("n >= 2"),
        })
        .collect()
}

/// Run the replication study described by `cfg`.
pub fn run_replicates(cfg: &SimConfig) -> Result<Vec<ReplicateStats>> {
    if cfg.n < 2 {
        return Err(Error::TooFewVertices { needed: 2, got: cfg.n });
    }
    if cfg.replicates == 0 || cfg.kinds.is_empty() {
        return Err(Error::DegenerateInput("no replicates or no statistics requested".into()));
    }
    let triangulation = cfg.geometry.triangulation()?;
    let per_replicate: Vec<Vec<f64>> = (0..cfg.replicates)
        .into_par_iter()
        .map(|rep| {
            let mut rng = replicate_rng(cfg.seed, rep as u64);
            replicate_densities(&triangulation, cfg.r, cfg.n, &cfg.kinds, &mut rng)
        })
        .collect();

    cfg.kinds
        .iter()
        .enumerate()
        .map(|(ki, &kind)| {
            let values: Vec<f64> = per_replicate.iter().map(|row| row[ki]).collect();
            let moments = if values.len() >= 2 {
                moment_report(&values, None)?
            } else {
                // a single replicate has a mean and nothing else
                MomentReport {
                    count: 1,
                    mean: values[0],
                    variance: f64::NAN,
                    skewness: f64::NAN,
                    excess_kurtosis: f64::NAN,
                    ks_normal: f64::NAN,
                }
            };
            let histogram = histogram(&values, cfg.bins);
            Ok(ReplicateStats { kind, values, moments, histogram })
        })
        .collect()
}

/// The sample of replicate 0 under `cfg` (for dumping and round-trips).
pub fn replicate_sample(cfg: &SimConfig, replicate: u64) -> Result<Vec<Point2>> {
    let triangulation = cfg.geometry.triangulation()?;
    let mut rng = replicate_rng(cfg.seed, replicate);
    Ok(if triangulation.triangles.len() == 1 {
        sample_uniform_triangle(&triangulation.triangle(0), cfg.n, &mut rng)
    } else {
        sample_uniform_hull(&triangulation, cfg.n, &mut rng).0
    })
}
