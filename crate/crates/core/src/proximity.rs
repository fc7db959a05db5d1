//! Proportional-edge proximity regions.
//!
//! For an anchor triangle T with vertices y1, y2, y3, the expansion parameter
//! r >= 1 and a point x in T, the proximity region N^r(x) is the triangle
//! similar to T, anchored at the vertex v(x) whose vertex region contains x,
//! scaled by r times x's height fraction, and clipped to T. In barycentric
//! terms:
//!
//!   z in N^r(x)  <=>  z in T  and  1 - b_v(z) <= r * (1 - b_v(x))
//!
//! with v = v(x) the index of x's largest barycentric coordinate. The dual
//! region {z : x in N^r(z)} needs no polygon of its own; membership is the
//! swapped test.

use serde::Serialize;

use crate::geometry::{Point2, Triangle};

use crate::{Error, Result};

/// Expansion parameter r in [1, inf]; infinity is `f64::INFINITY`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Expansion(f64);

impl Expansion {
    pub fn new(r: f64) -> Result<Self> {
        if r.is_nan() || r < 1.0 {
            return Err(Error::DomainError(format!("expansion parameter must be >= 1, got {r}")));
        }
        Ok(Expansion(r))
    }

    pub fn infinite() -> Self {
        Expansion(f64::INFINITY)
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    pub fn is_infinite(&self) -> bool {
        self.0.is_infinite()
    }
}

impl std::str::FromStr for Expansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(Expansion::infinite());
        }
        let r: f64 =
            s.parse().map_err(|_| Error::Parse(format!("invalid expansion parameter {s:?}")))?;
        Expansion::new(r)
    }
}

impl std::fmt::Display for Expansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Index (0-based) of the vertex whose region contains `x`.
///
/// The vertex regions partition T by the segments from the center of mass to
/// the edge midpoints; those segments lie on the medians, so the region of
/// vertex i is exactly the set where b_i is the largest barycentric
/// coordinate. Ties go to the smallest index.
pub fn vertex_region(tri: &Triangle, x: Point2) -> Result<usize> {
    let b = tri.barycentric(x);
    if !b.is_inside() {
        return Err(Error::OutsideDomain { index: None });
    }
    Ok(b.argmax())
}

fn check_inside(tri: &Triangle, p: Point2, index: usize) -> Result<()> {
    if tri.barycentric(p).is_inside() {
        Ok(())
    } else {
        Err(Error::OutsideDomain { index: Some(index) })
    }
}

/// Is `z` in the proportional-edge proximity region of `x`?
pub fn in_proximity_region(tri: &Triangle, r: Expansion, x: Point2, z: Point2) -> Result<bool> {
    check_inside(tri, x, 0)?;
    check_inside(tri, z, 1)?;
    Ok(in_proximity_region_unchecked(tri, r, x, z))
}

/// Membership test without the domain checks; callers guarantee both points
/// lie in the closed triangle.
pub(crate) fn in_proximity_region_unchecked(
    tri: &Triangle,
    r: Expansion,
    x: Point2,
    z: Point2,
) -> bool {
    if tri.vertices().contains(&x) {
        // the region of a vertex is the vertex itself, for every r
        return z == x;
    }
    if r.is_infinite() {
        return true;
    }
    let bx = tri.barycentric(x);
    let v = bx.argmax();
    let bz = tri.barycentric(z);
    1.0 - bz.as_array()[v] <= r.value() * (1.0 - bx.as_array()[v])
}

/// Is `z` in the dual region of `x`, i.e. is `x` in the proximity region of `z`?
pub fn in_gamma1_region(tri: &Triangle, r: Expansion, x: Point2, z: Point2) -> Result<bool> {
    in_proximity_region(tri, r, z, x)
}

/// A convex polygon with counter-clockwise vertices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexPolygon {
    pub vertices: Vec<Point2>,
}

impl ConvexPolygon {
    pub fn area(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        let mut s = 0.0;
        for i in 0..n {
            let (a, b) = (v[i], v[(i + 1) % n]);
            s += a.x * b.y - b.x * a.y;
        }
        0.5 * s
    }
}

/// The proximity region of `x` as an explicit polygon, for finite r.
///
/// The scaled triangle is anchored at v(x), so the clip against T is either
/// the whole of T (scale >= 1) or the scaled triangle itself.
pub fn proximity_polygon(tri: &Triangle, r: f64, x: Point2) -> Result<ConvexPolygon> {
    if !(1.0..f64::INFINITY).contains(&r) {
        return Err(Error::DomainError(format!("need finite r >= 1, got {r}")));
    }
    let b = tri.barycentric(x);
    if !b.is_inside() {
        return Err(Error::OutsideDomain { index: None });
    }
    if tri.vertices().contains(&x) {
        return Err(Error::DegeneratePoint("proximity polygon of an anchor vertex".into()));
    }
    let v = b.argmax();
    let s = r * (1.0 - b.as_array()[v]);
    let verts = tri.vertices();
    if s >= 1.0 {
        return Ok(ConvexPolygon { vertices: verts.to_vec() });
    }
    let apex = verts[v];
    let scaled: Vec<Point2> = (0..3)
        .map(|k| {
            let w = verts[(v + k) % 3];
            Point2::new(apex.x + s * (w.x - apex.x), apex.y + s * (w.y - apex.y))
        })
        .collect();
    Ok(ConvexPolygon { vertices: scaled })
}
