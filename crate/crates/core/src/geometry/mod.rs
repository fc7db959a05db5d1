//! Planar primitives: points, triangles, barycentric coordinates, affine maps,
//! convex hulls, and Delaunay triangulations.

mod delaunay;
mod hull;
pub(crate) mod predicates;

pub use delaunay::{delaunay, verify_delaunay, Triangulation};
pub use hull::{convex_hull, hull_contains};
pub use predicates::set_exact_predicates;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point in the plane.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Barycentric coordinates of a point with respect to a triangle.
///
/// For a point inside the closed triangle all three coordinates are
/// nonnegative and they always sum to one.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Barycentric {
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

impl Barycentric {
    pub fn as_array(&self) -> [f64; 3] {
        [self.b1, self.b2, self.b3]
    }

    /// Index of the largest coordinate, smallest index on ties.
    pub fn argmax(&self) -> usize {
        let b = self.as_array();
        let mut best = 0;
        for i in 1..3 {
            if b[i] > b[best] {
                best = i;
            }
        }
        best
    }

    /// All coordinates nonnegative (closed triangle membership).
    pub fn is_inside(&self) -> bool {
        self.b1 >= 0.0 && self.b2 >= 0.0 && self.b3 >= 0.0
    }
}

/// A non-degenerate triangle with vertices in fixed order.
///
/// Construction normalizes the orientation to counter-clockwise by swapping
/// the second and third vertex if necessary; the stored order is the one all
/// vertex indices refer to.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    vertices: [Point2; 3],
}

/// The standard equilateral triangle with vertices (0,0), (1,0), (1/2, sqrt(3)/2).
pub fn equilateral() -> Triangle {
    Triangle {
        vertices: [
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.5, 3f64.sqrt() / 2.0),
        ],
    }
}

impl Triangle {
    pub fn new(a: Point2, b: Point2, c: Point2) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::DegenerateInput("non-finite vertex coordinate".into()));
        }
        match predicates::orient2d(a, b, c) {
            std::cmp::Ordering::Greater => Ok(Triangle { vertices: [a, b, c] }),
            std::cmp::Ordering::Less => Ok(Triangle { vertices: [a, c, b] }),
            std::cmp::Ordering::Equal => {
                Err(Error::DegenerateInput("collinear triangle vertices".into()))
            }
        }
    }

    pub fn vertices(&self) -> [Point2; 3] {
        self.vertices
    }

    pub fn vertex(&self, i: usize) -> Point2 {
        self.vertices[i]
    }

    pub fn centroid(&self) -> Point2 {
        let [a, b, c] = self.vertices;
        Point2::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0)
    }

    pub fn area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))
    }

    /// Barycentric coordinates of `p` with respect to this triangle.
    pub fn barycentric(&self, p: Point2) -> Barycentric {
        let [a, b, c] = self.vertices;
        let d = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
        let b2 = ((p.x - a.x) * (c.y - a.y) - (c.x - a.x) * (p.y - a.y)) / d;
        let b3 = ((b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)) / d;
        Barycentric { b1: 1.0 - b2 - b3, b2, b3 }
    }

    /// Reconstruct a point from barycentric coordinates.
    pub fn point_at(&self, b: Barycentric) -> Point2 {
        let [p, q, s] = self.vertices;
        Point2::new(
            b.b1 * p.x + b.b2 * q.x + b.b3 * s.x,
            b.b1 * p.y + b.b2 * q.y + b.b3 * s.y,
        )
    }

    /// Closed-triangle membership via exact orientation tests.
    pub fn contains(&self, p: Point2) -> bool {
        let [a, b, c] = self.vertices;
        use std::cmp::Ordering::Less;
        predicates::orient2d(a, b, p) != Less
            && predicates::orient2d(b, c, p) != Less
            && predicates::orient2d(c, a, p) != Less
    }
}

/// An invertible affine map `x -> L x + t`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct AffineMap {
    /// Row-major 2x2 linear part.
    pub linear: [[f64; 2]; 2],
    pub shift: Point2,
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap { linear: [[1.0, 0.0], [0.0, 1.0]], shift: Point2::new(0.0, 0.0) }
    }

    pub fn det(&self) -> f64 {
        self.linear[0][0] * self.linear[1][1] - self.linear[0][1] * self.linear[1][0]
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        Point2::new(
            self.linear[0][0] * p.x + self.linear[0][1] * p.y + self.shift.x,
            self.linear[1][0] * p.x + self.linear[1][1] * p.y + self.shift.y,
        )
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let a = self.linear;
        let b = other.linear;
        AffineMap {
            linear: [
                [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
                [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
            ],
            shift: self.apply(other.shift),
        }
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let d = self.det();
        if d == 0.0 || !d.is_finite() {
            return Err(Error::DegenerateInput("singular affine map".into()));
        }
        let [[a, b], [c, e]] = self.linear;
        let inv = [[e / d, -b / d], [-c / d, a / d]];
        let s = Point2::new(
            -(inv[0][0] * self.shift.x + inv[0][1] * self.shift.y),
            -(inv[1][0] * self.shift.x + inv[1][1] * self.shift.y),
        );
        Ok(AffineMap { linear: inv, shift: s })
    }
}

/// The affine map taking `tri` onto the standard equilateral triangle.
///
/// The first stored vertex goes to (0,0), the second to (1,0), the third to
/// (1/2, sqrt(3)/2). Since construction normalizes both triangles to
/// counter-clockwise order the determinant is positive and the map pushes the
/// uniform measure on `tri` forward to the uniform measure on the target.
pub fn standardize_map(tri: &Triangle) -> AffineMap {
    let [a, b, c] = tri.vertices();
    let e = equilateral().vertices();
    // solve L*(b-a) = e1-e0, L*(c-a) = e2-e0
    let (u1, u2) = (b.x - a.x, b.y - a.y);
    let (v1, v2) = (c.x - a.x, c.y - a.y);
    let d = u1 * v2 - u2 * v1;
    let (p1, p2) = (e[1].x - e[0].x, e[1].y - e[0].y);
    let (q1, q2) = (e[2].x - e[0].x, e[2].y - e[0].y);
    let linear = [
        [(p1 * v2 - q1 * u2) / d, (q1 * u1 - p1 * v1) / d],
        [(p2 * v2 - q2 * u2) / d, (q2 * u1 - p2 * v1) / d],
    ];
    let m = AffineMap { linear, shift: Point2::new(0.0, 0.0) };
    let im = m.apply(a);
    AffineMap { linear, shift: Point2::new(e[0].x - im.x, e[0].y - im.y) }
}
