mod common;

use common::SplitMix;
use pepcd::geometry::{
    convex_hull, delaunay, equilateral, hull_contains, standardize_map, verify_delaunay, Point2,
    Triangle,
};
use proptest::prelude::*;

#[test]
fn square_tie_break_against_brute_force() {
    // unit square: enumerate all candidate triangulations from the 4 possible
    // triangles; exactly the two diagonal splits are valid Delaunay
    // triangulations, and the implementation must return the
    // lexicographically smaller one
    let pts = vec![
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(1.0, 1.0),
        Point2::new(0.0, 1.0),
    ];
    let candidates: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut valid: Vec<Vec<[usize; 3]>> = Vec::new();
    for i in 0..candidates.len() {
        for j in (i + 1)..candidates.len() {
            let (a, b) = (candidates[i], candidates[j]);
            let area: f64 = [a, b]
                .iter()
                .map(|t| {
                    Triangle::new(pts[t[0]], pts[t[1]], pts[t[2]]).unwrap().area()
                })
                .sum();
            // tiling: full area, a shared edge, and the remaining vertices on
            // opposite sides of it
            if (area - 1.0).abs() > 1e-12 {
                continue;
            }
            let shared: Vec<usize> =
                a.iter().filter(|v| b.contains(v)).copied().collect();
            if shared.len() != 2 {
                continue;
            }
            let third = |t: [usize; 3]| *t.iter().find(|v| !shared.contains(v)).unwrap();
            let side = |v: usize| {
                let (p, q, w) = (pts[shared[0]], pts[shared[1]], pts[v]);
                ((q.x - p.x) * (w.y - p.y) - (q.y - p.y) * (w.x - p.x)).signum()
            };
            if side(third(a)) * side(third(b)) >= 0.0 {
                continue;
            }
            // every triangle passes the non-strict empty-circumcircle test
            let tmp = pepcd::geometry::Triangulation {
                sites: pts.clone(),
                triangles: vec![a, b],
                hull: vec![0, 1, 2, 3],
            };
            if !verify_delaunay(&tmp) {
                continue;
            }
            valid.push(vec![a, b]);
        }
    }
    assert_eq!(valid.len(), 2, "two diagonal triangulations tile the square");
    let t = delaunay(&pts).unwrap();
    assert!(verify_delaunay(&t), "non-strict empty circumcircle");
    assert!(valid.contains(&t.triangles));
    let lex_min = valid.iter().min().unwrap();
    assert_eq!(&t.triangles, lex_min);
}

#[test]
fn delaunay_random_instances_verified_exactly() {
    let mut rng = SplitMix(0x5eed);
    for _ in 0..100 {
        let pts: Vec<Point2> =
            (0..20).map(|_| Point2::new(rng.f64() * 4.0 - 2.0, rng.f64() * 4.0 - 2.0)).collect();
        let t = delaunay(&pts).unwrap();
        assert!(verify_delaunay(&t));
        let h = t.hull.len();
        assert_eq!(t.triangles.len(), 2 * (pts.len() - h) + h - 2);
        // triangles tile the hull: areas sum to the hull polygon area
        let tri_area: f64 = t.areas().iter().sum();
        let hull_area = {
            let mut s = 0.0;
            for k in 0..h {
                let (a, b) = (pts[t.hull[k]], pts[t.hull[(k + 1) % h]]);
                s += a.x * b.y - b.x * a.y;
            }
            0.5 * s
        };
        assert!((tri_area - hull_area).abs() < 1e-9 * hull_area.abs().max(1.0));
        // every site is in some triangle
        for &p in &pts {
            assert!(t.locate(p).is_some());
        }
    }
}

#[test]
fn cocircular_grid_still_valid() {
    // a 4x4 integer grid is full of cocircular quadruples
    let mut pts = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            pts.push(Point2::new(i as f64, j as f64));
        }
    }
    let t = delaunay(&pts).unwrap();
    assert!(verify_delaunay(&t));
    assert_eq!(t.hull.len(), 12);
    assert_eq!(t.triangles.len(), 2 * 4 + 12 - 2);
    assert_eq!(delaunay(&pts).unwrap(), t);
}

#[test]
fn hull_of_triangulation_contains_everything() {
    let mut rng = SplitMix(77);
    for _ in 0..30 {
        let pts: Vec<Point2> = (0..15).map(|_| Point2::new(rng.f64(), rng.f64())).collect();
        let hull = convex_hull(&pts).unwrap();
        for &p in &pts {
            assert!(hull_contains(&pts, &hull, p));
        }
    }
}

proptest! {
    #[test]
    fn barycentric_recombination(
        ax in -5.0f64..5.0, ay in -5.0f64..5.0,
        bx in -5.0f64..5.0, by in -5.0f64..5.0,
        cx in -5.0f64..5.0, cy in -5.0f64..5.0,
        px in -5.0f64..5.0, py in -5.0f64..5.0,
    ) {
        let t = Triangle::new(Point2::new(ax, ay), Point2::new(bx, by), Point2::new(cx, cy));
        prop_assume!(t.is_ok());
        let t = t.unwrap();
        prop_assume!(t.area() > 1e-3);
        let p = Point2::new(px, py);
        let b = t.barycentric(p);
        prop_assert!((b.b1 + b.b2 + b.b3 - 1.0).abs() < 1e-9);
        let q = t.point_at(b);
        prop_assert!((p.x - q.x).abs() < 1e-8 && (p.y - q.y).abs() < 1e-8);
    }

    #[test]
    fn barycentric_affine_invariance(
        px in 0.0f64..1.0, py in 0.0f64..1.0,
        m00 in -2.0f64..2.0, m01 in -2.0f64..2.0,
        m10 in -2.0f64..2.0, m11 in -2.0f64..2.0,
        tx in -3.0f64..3.0, ty in -3.0f64..3.0,
    ) {
        let det = m00 * m11 - m01 * m10;
        prop_assume!(det.abs() > 0.1 && det.abs() < 10.0);
        let te = equilateral();
        let map = |p: Point2| Point2::new(
            m00 * p.x + m01 * p.y + tx,
            m10 * p.x + m11 * p.y + ty,
        );
        let v = te.vertices();
        let mt = Triangle::new(map(v[0]), map(v[1]), map(v[2])).unwrap();
        let p = Point2::new(px, py);
        let b0 = te.barycentric(p).as_array();
        let b1 = mt.barycentric(map(p)).as_array();
        // a reflection swaps the stored vertex order (orientation fix), which
        // permutes the coordinates accordingly
        let b1 = if det > 0.0 { b1 } else { [b1[0], b1[2], b1[1]] };
        for k in 0..3 {
            prop_assert!((b0[k] - b1[k]).abs() < 1e-9, "{:?} vs {:?}", b0, b1);
        }
    }
}

#[test]
fn standardize_pushforward_uniformity() {
    // the standardizing map of a random triangle sends uniform samples to
    // uniform samples on T_e: check first moments against the T_e centroid
    let tri = Triangle::new(
        Point2::new(0.3, -0.8),
        Point2::new(2.4, 0.2),
        Point2::new(0.9, 1.7),
    )
    .unwrap();
    let m = standardize_map(&tri);
    let mut rng = pepcd::montecarlo::replicate_rng(2718, 0);
    let pts = pepcd::montecarlo::sample_uniform_triangle(&tri, 200_000, &mut rng);
    let te = equilateral();
    let (mut sx, mut sy) = (0.0, 0.0);
    for p in &pts {
        let q = m.apply(*p);
        assert!(te.barycentric(q).b1 > -1e-9);
        sx += q.x;
        sy += q.y;
    }
    let n = pts.len() as f64;
    let c = te.centroid();
    // coordinate variance of uniform T_e is 1/24
    let se = (1.0 / 24.0 / n).sqrt();
    assert!((sx / n - c.x).abs() < 4.0 * se);
    assert!((sy / n - c.y).abs() < 4.0 * se);
}
