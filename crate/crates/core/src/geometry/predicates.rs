//! Orientation and in-circle predicates: fast double-precision evaluation with
//! an exact big-rational fallback whenever the floating-point result is within
//! its forward error bound.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::Point2;

const EPS: f64 = f64::EPSILON / 2.0; // 2^-53
const CCW_ERRBOUND_A: f64 = (3.0 + 16.0 * EPS) * EPS;
const ICC_ERRBOUND_A: f64 = (10.0 + 96.0 * EPS) * EPS;

static EXACT_FALLBACK: AtomicBool = AtomicBool::new(true);

/// Enable or disable the exact big-rational fallback (process-wide). With
/// the fallback off, near-degenerate configurations resolve by the sign of
/// the rounded determinant; intended only for benchmarking comparisons.
pub fn set_exact_predicates(enabled: bool) {
    EXACT_FALLBACK.store(enabled, AtomicOrdering::Relaxed);
}

fn exact_enabled() -> bool {
    EXACT_FALLBACK.load(AtomicOrdering::Relaxed)
}

fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite coordinate")
}

/// Sign of the signed area of (a, b, c): `Greater` for counter-clockwise.
pub fn orient2d(a: Point2, b: Point2, c: Point2) -> Ordering {
    let detleft = (a.x - c.x) * (b.y - c.y);
    let detright = (a.y - c.y) * (b.x - c.x);
    let det = detleft - detright;
    let detsum = detleft.abs() + detright.abs();
    if det.abs() > CCW_ERRBOUND_A * detsum {
        return if det > 0.0 { Ordering::Greater } else { Ordering::Less };
    }
    if !exact_enabled() {
        return if det > 0.0 {
            Ordering::Greater
        } else if det < 0.0 {
            Ordering::Less
        } else {
            Ordering::Equal
        };
    }
    orient2d_exact(a, b, c)
}

fn orient2d_exact(a: Point2, b: Point2, c: Point2) -> Ordering {
    let det = (rat(a.x) - rat(c.x)) * (rat(b.y) - rat(c.y))
        - (rat(a.y) - rat(c.y)) * (rat(b.x) - rat(c.x));
    big_sign(&det)
}

fn big_sign(x: &BigRational) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Sign of the in-circle determinant: `Greater` iff `d` lies strictly inside
/// the circumcircle of the counter-clockwise triangle (a, b, c).
pub fn incircle(a: Point2, b: Point2, c: Point2, d: Point2) -> Ordering {
    let adx = a.x - d.x;
    let ady = a.y - d.y;
    let bdx = b.x - d.x;
    let bdy = b.y - d.y;
    let cdx = c.x - d.x;
    let cdy = c.y - d.y;

    let bdxcdy = bdx * cdy;
    let cdxbdy = cdx * bdy;
    let alift = adx * adx + ady * ady;

    let cdxady = cdx * ady;
    let adxcdy = adx * cdy;
    let blift = bdx * bdx + bdy * bdy;

    let adxbdy = adx * bdy;
    let bdxady = bdx * ady;
    let clift = cdx * cdx + cdy * cdy;

    let det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    let permanent = (bdxcdy.abs() + cdxbdy.abs()) * alift
        + (cdxady.abs() + adxcdy.abs()) * blift
        + (adxbdy.abs() + bdxady.abs()) * clift;
    if det.abs() > ICC_ERRBOUND_A * permanent {
        return if det > 0.0 { Ordering::Greater } else { Ordering::Less };
    }
    if !exact_enabled() {
        return if det > 0.0 {
            Ordering::Greater
        } else if det < 0.0 {
            Ordering::Less
        } else {
            Ordering::Equal
        };
    }
    incircle_exact(a, b, c, d)
}

fn incircle_exact(a: Point2, b: Point2, c: Point2, d: Point2) -> Ordering {
    let adx = rat(a.x) - rat(d.x);
    let ady = rat(a.y) - rat(d.y);
    let bdx = rat(b.x) - rat(d.x);
    let bdy = rat(b.y) - rat(d.y);
    let cdx = rat(c.x) - rat(d.x);
    let cdy = rat(c.y) - rat(d.y);

    let alift = &adx * &adx + &ady * &ady;
    let blift = &bdx * &bdx + &bdy * &bdy;
    let clift = &cdx * &cdx + &cdy * &cdy;

    let det = alift * (&bdx * &cdy - &cdx * &bdy) + blift * (&cdx * &ady - &adx * &cdy)
        + clift * (&adx * &bdy - &bdx * &ady);
    big_sign(&det)
}

/// Exact test that `p` lies on the closed segment (a, b); assumes collinearity.
pub fn on_segment_collinear(a: Point2, b: Point2, p: Point2) -> bool {
    let (pa, pb, pp) = ((rat(a.x), rat(a.y)), (rat(b.x), rat(b.y)), (rat(p.x), rat(p.y)));
    let dot1 = (&pp.0 - &pa.0) * (&pb.0 - &pa.0) + (&pp.1 - &pa.1) * (&pb.1 - &pa.1);
    let dot2 = (&pp.0 - &pb.0) * (&pa.0 - &pb.0) + (&pp.1 - &pb.1) * (&pa.1 - &pb.1);
    !dot1.is_negative() && !dot2.is_negative()
}

/// Exact lexicographic comparison used for deterministic tie-breaks.
pub fn lex_cmp(a: Point2, b: Point2) -> Ordering {
    a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap())
}
