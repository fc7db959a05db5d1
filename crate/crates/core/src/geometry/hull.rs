//! Convex hull by Andrew's monotone chain with exact orientation tests.

use std::cmp::Ordering;

use super::predicates::{lex_cmp, orient2d};
use super::Point2;
use crate::{Error, Result};

/// Indices of the convex-hull vertices in counter-clockwise order.
///
/// Returns the extreme points only (points interior to a hull edge are not
/// listed). Duplicate input points are tolerated; the first occurrence wins.
pub fn convex_hull(points: &[Point2]) -> Result<Vec<usize>> {
    for p in points {
        if !p.is_finite() {
            return Err(Error::DegenerateInput("non-finite point".into()));
        }
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| lex_cmp(points[i], points[j]).then(i.cmp(&j)));
    order.dedup_by(|&mut i, &mut j| points[i] == points[j]);
    if order.len() < 3 {
        return Err(Error::DegenerateInput("fewer than 3 distinct points".into()));
    }

    let build = |idx: &[usize]| -> Vec<usize> {
        let mut chain: Vec<usize> = Vec::with_capacity(idx.len());
        for &i in idx {
            while chain.len() >= 2 {
                let a = points[chain[chain.len() - 2]];
                let b = points[chain[chain.len() - 1]];
                if orient2d(a, b, points[i]) == Ordering::Greater {
                    break;
                }
                chain.pop();
            }
            chain.push(i);
        }
        chain
    };

    let lower = build(&order);
    let rev: Vec<usize> = order.iter().rev().copied().collect();
    let upper = build(&rev);
    let mut hull = lower;
    hull.extend_from_slice(&upper[1..upper.len() - 1]);
    if hull.len() < 3 {
        return Err(Error::DegenerateInput("all points collinear".into()));
    }
    // rotate so the smallest index comes first, preserving CCW order
    let start = hull.iter().enumerate().min_by_key(|(_, &i)| i).map(|(k, _)| k).unwrap();
    hull.rotate_left(start);
    Ok(hull)
}

/// Closed-hull membership: `p` inside or on the boundary of the hull polygon.
pub fn hull_contains(points: &[Point2], hull: &[usize], p: Point2) -> bool {
    hull.iter().zip(hull.iter().cycle().skip(1)).all(|(&i, &j)| {
        orient2d(points[i], points[j], p) != Ordering::Less
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_corners() {
        let pts = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h, vec![0, 1, 2, 3]);
    }

    #[test]
    fn centroid_excluded() {
        let pts = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
            Point2::new(0.5, 0.5),
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h, vec![0, 1, 2, 3]);
        assert!(hull_contains(&pts, &h, Point2::new(0.5, 0.5)));
        assert!(hull_contains(&pts, &h, Point2::new(0.0, 0.5)));
        assert!(!hull_contains(&pts, &h, Point2::new(1.5, 0.5)));
    }

    #[test]
    fn three_points() {
        let pts = vec![Point2::new(0.0, 0.0), Point2::new(2.0, 0.3), Point2::new(0.7, 1.5)];
        assert_eq!(convex_hull(&pts).unwrap().len(), 3);
    }

    #[test]
    fn collinear_rejected() {
        let pts = vec![Point2::new(0.0, 0.0), Point2::new(1.0, 1.0), Point2::new(2.0, 2.0)];
        assert!(matches!(convex_hull(&pts), Err(Error::DegenerateInput(_))));
        let two = vec![Point2::new(0.0, 0.0), Point2::new(1.0, 1.0), Point2::new(0.0, 0.0)];
        assert!(matches!(convex_hull(&two), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn every_point_inside_hull() {
        let mut state = 7u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..50 {
            let pts: Vec<Point2> =
                (0..30).map(|_| Point2::new(next() * 3.0, next() * 3.0)).collect();
            let h = convex_hull(&pts).unwrap();
            for &p in &pts {
                assert!(hull_contains(&pts, &h, p));
            }
        }
    }
}
