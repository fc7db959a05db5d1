//! Incremental Bowyer-Watson Delaunay triangulation.
//!
//! The triangulation is maintained as a set of counter-clockwise triangles
//! plus "ghost" triangles over a virtual vertex at infinity, one per hull
//! edge, so insertion outside the current hull needs no special casing and no
//! super-triangle coordinates. All predicates go through the exact-fallback
//! routines in [`predicates`], so the empty-circumcircle property holds
//! exactly (non-strictly for cocircular sites).

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::predicates::{incircle, on_segment_collinear, orient2d};
use super::{Point2, Triangle};
use crate::{Error, Result};

const GHOST: usize = usize::MAX;

/// A Delaunay triangulation of a planar point set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Triangulation {
    pub sites: Vec<Point2>,
    /// Index triples, counter-clockwise, smallest index first, sorted.
    pub triangles: Vec<[usize; 3]>,
    /// Hull sites in counter-clockwise order starting from the smallest
    /// index; includes sites lying on the interior of a hull edge.
    pub hull: Vec<usize>,
}

impl Triangulation {
    /// The i-th triangle as a geometric [`Triangle`].
    pub fn triangle(&self, i: usize) -> Triangle {
        let [a, b, c] = self.triangles[i];
        Triangle::new(self.sites[a], self.sites[b], self.sites[c])
            .expect("stored triangles are non-degenerate")
    }

    pub fn areas(&self) -> Vec<f64> {
        (0..self.triangles.len()).map(|i| self.triangle(i).area()).collect()
    }

    /// Index of the first triangle (in stored order) whose closed interior
    /// contains `p`; `None` when `p` is outside the hull.
    pub fn locate(&self, p: Point2) -> Option<usize> {
        (0..self.triangles.len()).find(|&i| {
            let [a, b, c] = self.triangles[i];
            contains_ccw(self.sites[a], self.sites[b], self.sites[c], p)
        })
    }

    /// The trivial triangulation of a single triangle.
    pub fn single(tri: &Triangle) -> Triangulation {
        Triangulation {
            sites: tri.vertices().to_vec(),
            triangles: vec![[0, 1, 2]],
            hull: vec![0, 1, 2],
        }
    }
}

fn contains_ccw(a: Point2, b: Point2, c: Point2, p: Point2) -> bool {
    orient2d(a, b, p) != Ordering::Less
        && orient2d(b, c, p) != Ordering::Less
        && orient2d(c, a, p) != Ordering::Less
}

struct Mesh<'a> {
    pts: &'a [Point2],
    /// Alive triangles; ghosts carry `GHOST` in the last slot.
    tris: Vec<[usize; 3]>,
    alive: Vec<bool>,
    /// Directed edge -> index of the owning alive triangle.
    edge: HashMap<(usize, usize), usize>,
}

fn canon(t: [usize; 3]) -> [usize; 3] {
    // rotate ghost to the last slot, otherwise smallest index first
    let k = if t.contains(&GHOST) {
        t.iter().position(|&v| v == GHOST).unwrap() + 1
    } else {
        t.iter().enumerate().min_by_key(|&(_, v)| v).unwrap().0
    } % 3;
    [t[k], t[(k + 1) % 3], t[(k + 2) % 3]]
}

impl<'a> Mesh<'a> {
    fn add(&mut self, t: [usize; 3]) {
        let t = canon(t);
        let id = self.tris.len();
        self.tris.push(t);
        self.alive.push(true);
        for k in 0..3 {
            self.edge.insert((t[k], t[(k + 1) % 3]), id);
        }
    }

    fn remove(&mut self, id: usize) {
        let t = self.tris[id];
        self.alive[id] = false;
        for k in 0..3 {
            self.edge.remove(&(t[k], t[(k + 1) % 3]));
        }
    }

    fn conflicts(&self, id: usize, p: Point2) -> bool {
        let [a, b, c] = self.tris[id];
        if c == GHOST {
            // ghost over hull edge b->a: conflict when p is strictly outside
            // across that edge, or exactly on the closed edge itself
            let (u, v) = (self.pts[b], self.pts[a]);
            match orient2d(u, v, p) {
                Ordering::Less => true,
                Ordering::Equal => on_segment_collinear(u, v, p),
                Ordering::Greater => false,
            }
        } else {
            incircle(self.pts[a], self.pts[b], self.pts[c], p) == Ordering::Greater
        }
    }

    fn insert(&mut self, ip: usize) -> Result<()> {
        let p = self.pts[ip];
        let dead: Vec<usize> =
            (0..self.tris.len()).filter(|&i| self.alive[i] && self.conflicts(i, p)).collect();
        if dead.is_empty() {
            return Err(Error::DegenerateInput(format!(
                "site #{ip} conflicts with no triangle (duplicate site?)"
            )));
        }
        let dead_set: Vec<bool> = {
            let mut v = vec![false; self.tris.len()];
            for &i in &dead {
                v[i] = true;
            }
            v
        };
        // rim: directed edges of dead triangles whose reverse belongs to a live one
        let mut rim: Vec<(usize, usize)> = Vec::new();
        for &i in &dead {
            let t = self.tris[i];
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                match self.edge.get(&(b, a)) {
                    Some(&j) if dead_set[j] => {}
                    _ => rim.push((a, b)),
                }
            }
        }
        for &i in &dead {
            self.remove(i);
        }
        for (a, b) in rim {
            self.add([a, b, ip]);
        }
        Ok(())
    }
}

/// Delaunay triangulation of `points`.
///
/// Deterministic for a fixed input: canonical triangle ordering plus a
/// lexicographic tie-break among the valid triangulations of exactly
/// cocircular site groups. Duplicate sites and all-collinear inputs are
/// rejected.
pub fn delaunay(points: &[Point2]) -> Result<Triangulation> {
    if points.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "need at least 3 points, got {}",
            points.len()
        )));
    }
    for (i, p) in points.iter().enumerate() {
        if !p.is_finite() {
            return Err(Error::DegenerateInput(format!("non-finite point #{i}")));
        }
    }
    {
        let mut seen: HashMap<(u64, u64), usize> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            let key = ((p.x + 0.0).to_bits(), (p.y + 0.0).to_bits());
            if let Some(j) = seen.insert(key, i) {
                return Err(Error::DegenerateInput(format!("duplicate sites #{j} and #{i}")));
            }
        }
    }

    // deterministic initial triple: 0, the first point, and the first
    // point not collinear with them
    let i0 = 0usize;
    let i1 = 1usize;
    let i2 = (2..points.len())
        .find(|&k| orient2d(points[i0], points[i1], points[k]) != Ordering::Equal)
        .ok_or_else(|| Error::DegenerateInput("all points collinear".into()))?;

    let mut mesh = Mesh { pts: points, tris: Vec::new(), alive: Vec::new(), edge: HashMap::new() };
    let ccw = orient2d(points[i0], points[i1], points[i2]) == Ordering::Greater;
    let (a, b, c) = if ccw { (i0, i1, i2) } else { (i0, i2, i1) };
    mesh.add([a, b, c]);
    mesh.add([b, a, GHOST]);
    mesh.add([c, b, GHOST]);
    mesh.add([a, c, GHOST]);

    for ip in 2..points.len() {
        if ip == i2 {
            continue;
        }
        mesh.insert(ip)?;
    }

    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut hull_next: HashMap<usize, usize> = HashMap::new();
    for (i, t) in mesh.tris.iter().enumerate() {
        if !mesh.alive[i] {
            continue;
        }
        if t[2] == GHOST {
            // ghost [a, b, GHOST] sits over hull edge b->a
            hull_next.insert(t[1], t[0]);
        } else {
            triangles.push(*t);
        }
    }
    triangles.sort();

    let start = *hull_next.keys().min().expect("non-empty hull");
    let mut hull = vec![start];
    let mut cur = hull_next[&start];
    while cur != start {
        hull.push(cur);
        cur = hull_next[&cur];
    }

    let mut tri = Triangulation { sites: points.to_vec(), triangles, hull };
    canonicalize_cocircular(&mut tri);
    Ok(tri)
}

/// Deterministic tie-break for exactly cocircular quads: flip shared edges
/// while flipping yields a lexicographically smaller pair of sorted triples.
fn canonicalize_cocircular(tri: &mut Triangulation) {
    let pts = &tri.sites;
    for _ in 0..64 {
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, t) in tri.triangles.iter().enumerate() {
            for k in 0..3 {
                owner.insert((t[k], t[(k + 1) % 3]), i);
            }
        }
        let mut flipped = false;
        let mut edges: Vec<(usize, usize)> =
            owner.keys().copied().filter(|&(a, b)| a < b && owner.contains_key(&(b, a))).collect();
        edges.sort();
        for (a, b) in edges {
            let (i, j) = (owner[&(a, b)], owner[&(b, a)]);
            let c = *tri.triangles[i].iter().find(|&&v| v != a && v != b).unwrap();
            let d = *tri.triangles[j].iter().find(|&&v| v != a && v != b).unwrap();
            if incircle(pts[a], pts[b], pts[c], pts[d]) != Ordering::Equal {
                continue;
            }
            // strict convexity of the quad around edge (a, b)
            let (oa, ob) =
                (orient2d(pts[c], pts[d], pts[a]), orient2d(pts[c], pts[d], pts[b]));
            if oa == Ordering::Equal || ob == Ordering::Equal || oa == ob {
                continue;
            }
            let mut old_pair = [sorted3([a, b, c]), sorted3([a, b, d])];
            old_pair.sort();
            let mut new_pair = [sorted3([a, c, d]), sorted3([b, c, d])];
            new_pair.sort();
            if new_pair < old_pair {
                let (t1, t2) = if oa == Ordering::Greater {
                    ([c, d, a], [d, c, b])
                } else {
                    ([d, c, a], [c, d, b])
                };
                tri.triangles[i] = canon(t1);
                tri.triangles[j] = canon(t2);
                tri.triangles.sort();
                flipped = true;
                break;
            }
        }
        if !flipped {
            break;
        }
    }
}

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort();
    t
}

/// Exact non-strict empty-circumcircle verification of a triangulation.
pub fn verify_delaunay(tri: &Triangulation) -> bool {
    tri.triangles.iter().all(|&[a, b, c]| {
        tri.sites.iter().enumerate().all(|(k, &p)| {
            k == a || k == b || k == c
                || incircle(tri.sites[a], tri.sites[b], tri.sites[c], p) != Ordering::Greater
        })
    })
}
