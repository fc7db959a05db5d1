//! Shared test helpers: an independent numerical-integration oracle for the
//! closed-form curves, and a small deterministic RNG for fuzz loops.
//!
//! The oracle computes a_and(x) = area(N(x) ∩ Γ1(x)) and a_or(x) by exact
//! convex polygon clipping, then integrates a(X)/A and its square over
//! X ~ U(T_e) by midpoint quadrature on the first vertex region (3-fold
//! symmetry). It shares no code with the piecewise tables it checks.

#![allow(dead_code)]

use pepcd::geometry::Point2;

const SQ3: f64 = 1.732_050_807_568_877_2;

fn y_vertices() -> [Point2; 3] {
    [Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.5, SQ3 / 2.0)]
}

fn bary(p: Point2) -> [f64; 3] {
    let b2 = p.x - p.y / SQ3;
    let b3 = 2.0 * p.y / SQ3;
    [1.0 - b2 - b3, b2, b3]
}

type Poly = Vec<Point2>;

fn area(poly: &[Point2]) -> f64 {
    if poly.len() < 3 {
        return 0.0;
    }
    let mut s = 0.0;
    for i in 0..poly.len() {
        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
        s += a.x * b.y - b.x * a.y;
    }
    0.5 * s
}

/// Keep the part of a convex CCW polygon with n·z <= d.
fn clip_halfplane(poly: &[Point2], n: (f64, f64), d: f64) -> Poly {
    let mut out = Vec::with_capacity(poly.len() + 1);
    let k = poly.len();
    for i in 0..k {
        let (a, b) = (poly[i], poly[(i + 1) % k]);
        let fa = n.0 * a.x + n.1 * a.y - d;
        let fb = n.0 * b.x + n.1 * b.y - d;
        if fa <= 0.0 {
            out.push(a);
            if fb > 0.0 {
                let t = fa / (fa - fb);
                out.push(Point2::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
            }
        } else if fb <= 0.0 {
            let t = fa / (fa - fb);
            out.push(Point2::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
        }
    }
    out
}

fn clip_poly(mut poly: Poly, clipper: &[Point2]) -> Poly {
    let k = clipper.len();
    for i in 0..k {
        if poly.is_empty() {
            return poly;
        }
        let (a, b) = (clipper[i], clipper[(i + 1) % k]);
        let n = (b.y - a.y, a.x - b.x);
        let d = n.0 * a.x + n.1 * a.y;
        poly = clip_halfplane(&poly, n, d);
    }
    poly
}

fn vertex_regions() -> [Poly; 3] {
    let [y1, y2, y3] = y_vertices();
    let mc = Point2::new(0.5, SQ3 / 6.0);
    let m1 = Point2::new(0.75, SQ3 / 4.0);
    let m2 = Point2::new(0.25, SQ3 / 4.0);
    let m3 = Point2::new(0.5, 0.0);
    [vec![y1, m3, mc, m2], vec![y2, m1, mc, m3], vec![y3, m2, mc, m1]]
}

/// Half-plane {b_i(z) <= c} as (normal, offset(c)).
fn bary_halfplane(i: usize, c: f64) -> ((f64, f64), f64) {
    match i {
        0 => ((-1.0, -1.0 / SQ3), c - 1.0),
        1 => ((1.0, -1.0 / SQ3), c),
        _ => ((0.0, 2.0 / SQ3), c),
    }
}

/// Areas of N(x) ∩ Γ1(x) and N(x) ∪ Γ1(x) for the anchor point x at finite r.
pub fn intersection_union_areas(x: Point2, r: f64) -> (f64, f64) {
    let b = bary(x);
    let v = if b[0] >= b[1] && b[0] >= b[2] {
        0
    } else if b[1] >= b[2] {
        1
    } else {
        2
    };
    let ys = y_vertices();
    let s = r * (1.0 - b[v]);
    let npoly: Poly = if s >= 1.0 {
        ys.to_vec()
    } else {
        let apex = ys[v];
        ys.iter()
            .map(|w| Point2::new(apex.x + s * (w.x - apex.x), apex.y + s * (w.y - apex.y)))
            .collect()
    };
    let regions = vertex_regions();
    let mut a_and = 0.0;
    let mut a_or = 0.0;
    for i in 0..3 {
        let c = 1.0 - (1.0 - b[i]) / r;
        let (n, d) = bary_halfplane(i, c);
        let n_in_r = clip_poly(npoly.clone(), &regions[i]);
        let a_nr = area(&n_in_r);
        let gamma_r = clip_halfplane(&regions[i], n, d);
        let a_gr = area(&gamma_r);
        let a_ngr = area(&clip_halfplane(&n_in_r, n, d));
        a_and += a_ngr;
        a_or += a_nr + a_gr - a_ngr;
    }
    (a_and, a_or)
}

/// Numerical-integration oracle for (p_and, nu_and, p_or, nu_or) at finite r.
///
/// Midpoint rule over a grid on the first vertex region split into two
/// triangles; `cells` controls resolution (error ~ cells^-2).
pub fn curve_oracle(r: f64, cells: usize) -> (f64, f64, f64, f64) {
    let area_t = SQ3 / 4.0;
    let [y1, _, _] = y_vertices();
    let mc = Point2::new(0.5, SQ3 / 6.0);
    let m2 = Point2::new(0.25, SQ3 / 4.0);
    let m3 = Point2::new(0.5, 0.0);
    let mut sum_and = 0.0;
    let mut sum2_and = 0.0;
    let mut sum_or = 0.0;
    let mut sum2_or = 0.0;
    let mut total_w = 0.0;
    for tri in [[y1, m3, mc], [y1, mc, m2]] {
        let [a, b, c] = tri;
        let at = area(tri.as_ref());
        // map the unit square onto the triangle: P = a(1-u) + b u(1-v) + c uv,
        // jacobian 2 * at * u
        for iu in 0..cells {
            let u = (iu as f64 + 0.5) / cells as f64;
            for iv in 0..cells {
                let v = (iv as f64 + 0.5) / cells as f64;
                let p = Point2::new(
                    a.x * (1.0 - u) + b.x * (u * (1.0 - v)) + c.x * (u * v),
                    a.y * (1.0 - u) + b.y * (u * (1.0 - v)) + c.y * (u * v),
                );
                let w = 2.0 * at * u / (cells * cells) as f64;
                let (ai, ao) = intersection_union_areas(p, r);
                let (fi, fo) = (ai / area_t, ao / area_t);
                sum_and += w * fi;
                sum2_and += w * fi * fi;
                sum_or += w * fo;
                sum2_or += w * fo * fo;
                total_w += w;
            }
        }
    }
    let _ = total_w;
    // E over T = 3 * (integral over R(y1)) / area(T)
    let p_and = 3.0 * sum_and / area_t;
    let m2_and = 3.0 * sum2_and / area_t;
    let p_or = 3.0 * sum_or / area_t;
    let m2_or = 3.0 * sum2_or / area_t;
    (p_and, m2_and - p_and * p_and, p_or, m2_or - p_or * p_or)
}

/// Small deterministic generator for fuzz loops that should not depend on the
/// library's own RNG plumbing.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}
