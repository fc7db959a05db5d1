//! Proportional-edge proximity catch digraphs (PE-PCDs) on planar point data.
//!
//! Given a set of anchor points and a sample, this crate builds the PE-PCD
//! digraph together with its underlying (OR) and reflexivity (AND) graphs,
//! computes relative arc/edge densities, evaluates the closed-form asymptotic
//! mean and variance curves of those densities for uniform data, and runs a
//! complete-spatial-randomness test on the multi-triangle (Delaunay) case.
//!
//! The pieces:
//!
//! - [`geometry`]: barycentric coordinates, affine standardization to the
//!   equilateral triangle, convex hulls, and a Bowyer-Watson Delaunay
//!   triangulation with exact predicates.
//! - [`proximity`]: the proportional-edge proximity region `N_PE^r(x)` and its
//!   dual region as membership predicates, plus explicit region polygons.
//! - [`graphs`]: digraph/edge-set construction, densities, domination numbers,
//!   joint kernel statistics.
//! - [`asymptotics`]: exact piecewise-rational evaluation of the asymptotic
//!   mean and (co)variance curves, finite-sample variance, and the
//!   multi-triangle adjustments.
//! - [`montecarlo`]: seeded, replicable simulation of the density statistics.
//! - [`mtdensity`]: multi-triangle density variants and their identities.
//! - [`spatial`]: the CSR segregation/association test.
//!
//! A `pepcd` binary exposes the above as subcommands; see the README.

pub mod asymptotics;
pub mod geometry;
pub mod graphs;
pub mod io;
pub mod montecarlo;
pub mod mtdensity;
pub mod proximity;
pub mod spatial;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Input geometry cannot support the requested construction
    /// (collinear anchors, duplicate sites, too few distinct points, ...).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A point lies outside the domain it must belong to.
    #[error("point{} outside domain", match .index { Some(i) => format!(" #{i}"), None => String::new() })]
    OutsideDomain { index: Option<usize> },

    /// The operation is undefined at this exact point (e.g. a triangle vertex).
    #[error("operation undefined at this point: {0}")]
    DegeneratePoint(String),

    /// Fewer vertices than the statistic requires.
    #[error("too few vertices: need at least {needed}, got {got}")]
    TooFewVertices { needed: usize, got: usize },

    /// Argument outside the domain of a closed-form curve.
    #[error("domain error: {0}")]
    DomainError(String),

    /// The requested limit has a degenerate asymptotic distribution.
    #[error("degenerate limit: {0}")]
    DegenerateLimit(String),

    /// A replicate had the wrong size.
    #[error("invalid replicate: expected size {expected}, got {got}")]
    InvalidReplicate { expected: usize, got: usize },

    /// Triangle weights must be nonnegative and sum to one.
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use geometry::{AffineMap, Barycentric, Point2, Triangle, Triangulation};
pub use graphs::{DigraphAdjacency, EdgeKind, EdgeSet, Kind, PcdInstance};
pub use proximity::Expansion;
