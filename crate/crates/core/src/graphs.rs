//! PE-PCD digraphs, their underlying and reflexivity graphs, and the density
//! and domination statistics on them.

use serde::Serialize;

use crate::geometry::{Point2, Triangle, Triangulation};
use crate::proximity::{in_proximity_region_unchecked, Expansion};
use crate::{Error, Result};

/// Statistic family: digraph arcs, AND edges, or OR edges.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Arc,
    And,
    Or,
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "arc" => Ok(Kind::Arc),
            "and" => Ok(Kind::And),
            "or" => Ok(Kind::Or),
            _ => Err(Error::Parse(format!("unknown kind {s:?} (expected arc|and|or)"))),
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Arc => "arc",
            Kind::And => "and",
            Kind::Or => "or",
        })
    }
}

/// Edge-set flavor of a graph derived from the digraph.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    /// Reflexivity graph: edge when both arcs exist.
    And,
    /// Underlying graph: edge when at least one arc exists.
    Or,
}

impl From<EdgeKind> for Kind {
    fn from(k: EdgeKind) -> Kind {
        match k {
            EdgeKind::And => Kind::And,
            EdgeKind::Or => Kind::Or,
        }
    }
}

impl std::str::FromStr for EdgeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "and" => Ok(EdgeKind::And),
            "or" => Ok(EdgeKind::Or),
            _ => Err(Error::Parse(format!("unknown edge kind {s:?} (expected and|or)"))),
        }
    }
}

/// Square boolean matrix backed by bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix { n, words, rows: vec![0; words * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.rows[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn count_ones(&self) -> u64 {
        self.rows.iter().map(|w| w.count_ones() as u64).sum()
    }
}

/// Adjacency matrix of the PCD; `arcs (i, j)` means X_j in N(X_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigraphAdjacency {
    pub arcs: BitMatrix,
}

impl DigraphAdjacency {
    pub fn n(&self) -> usize {
        self.arcs.n()
    }

    pub fn arc_count(&self) -> u64 {
        self.arcs.count_ones()
    }

    /// Arc pairs (i, j) in row-major order.
    pub fn arc_list(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.arcs.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Symmetric edge set of the underlying or reflexivity graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    pub kind: EdgeKind,
    pub edges: BitMatrix,
}

impl EdgeSet {
    pub fn n(&self) -> usize {
        self.edges.n()
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.count_ones() / 2
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.edges.get(i, j)
    }
}

/// OR graph: edge {i, j} when either arc exists.
pub fn underlying_graph(d: &DigraphAdjacency) -> EdgeSet {
    combine(d, EdgeKind::Or)
}

/// AND graph: edge {i, j} when both arcs exist.
pub fn reflexivity_graph(d: &DigraphAdjacency) -> EdgeSet {
    combine(d, EdgeKind::And)
}

fn combine(d: &DigraphAdjacency, kind: EdgeKind) -> EdgeSet {
    let n = d.n();
    let mut m = BitMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (d.arcs.get(i, j), d.arcs.get(j, i));
            let e = match kind {
                EdgeKind::And => a && b,
                EdgeKind::Or => a || b,
            };
            if e {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    EdgeSet { kind, edges: m }
}

/// Relative arc density |A| / (n(n-1)).
pub fn arc_density(d: &DigraphAdjacency) -> Result<f64> {
    let n = d.n();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, got: n });
    }
    Ok(d.arc_count() as f64 / (n as f64 * (n as f64 - 1.0)))
}

/// Relative edge density 2|E| / (n(n-1)).
pub fn edge_density(e: &EdgeSet) -> Result<f64> {
    let n = e.n();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, got: n });
    }
    // count_ones is exactly 2|E|
    Ok(e.edges.count_ones() as f64 / (n as f64 * (n as f64 - 1.0)))
}

/// A built PCD instance: anchors, their triangulation, the sample, the
/// per-point triangle assignment, and the arc matrix.
#[derive(Clone, Debug)]
pub struct PcdInstance {
    pub triangulation: Triangulation,
    pub sample: Vec<Point2>,
    pub r: Expansion,
    /// Triangle index per sample point.
    pub assignment: Vec<usize>,
    triangles: Vec<Triangle>,
}

/// What to do with sample points outside the hull of the anchors.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OutsidePolicy {
    /// Fail with the index of the first offending point.
    Reject,
    /// Drop them; the dropped indices are reported by the builder.
    Drop,
}

impl PcdInstance {
    /// Build from anchors: 3 anchors form a single triangle, more are
    /// Delaunay-triangulated. Points on a shared edge go to the
    /// lowest-index triangle.
    pub fn build(
        anchors: &[Point2],
        sample: &[Point2],
        r: Expansion,
        policy: OutsidePolicy,
    ) -> Result<(Self, Vec<usize>)> {
        let triangulation = if anchors.len() == 3 {
            let t = Triangle::new(anchors[0], anchors[1], anchors[2])?;
            Triangulation::single(&t)
        } else if anchors.len() > 3 {
            crate::geometry::delaunay(anchors)?
        } else {
            return Err(Error::DegenerateInput(format!(
                "need at least 3 anchors, got {}",
                anchors.len()
            )));
        };
        Self::with_triangulation(triangulation, sample, r, policy)
    }

    pub fn with_triangulation(
        triangulation: Triangulation,
        sample: &[Point2],
        r: Expansion,
        policy: OutsidePolicy,
    ) -> Result<(Self, Vec<usize>)> {
        let mut kept = Vec::with_capacity(sample.len());
        let mut assignment = Vec::with_capacity(sample.len());
        let mut dropped = Vec::new();
        for (i, &p) in sample.iter().enumerate() {
            match triangulation.locate(p) {
                Some(t) => {
                    kept.push(p);
                    assignment.push(t);
                }
                None => match policy {
                    OutsidePolicy::Reject => {
                        return Err(Error::OutsideDomain { index: Some(i) })
                    }
                    OutsidePolicy::Drop => dropped.push(i),
                },
            }
        }
        Ok((Self::from_parts(triangulation, kept, r, assignment), dropped))
    }

    /// Build with a known assignment (samplers know which triangle each point
    /// came from); skips point location.
    pub fn from_parts(
        triangulation: Triangulation,
        sample: Vec<Point2>,
        r: Expansion,
        assignment: Vec<usize>,
    ) -> Self {
        assert_eq!(sample.len(), assignment.len(), "one triangle index per point");
        let triangles: Vec<Triangle> =
            (0..triangulation.triangles.len()).map(|i| triangulation.triangle(i)).collect();
        PcdInstance { triangulation, sample, r, assignment, triangles }
    }

    pub fn n(&self) -> usize {
        self.sample.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// Area weights w_i = A(T_i) / sum_j A(T_j).
    pub fn weights(&self) -> Vec<f64> {
        let areas: Vec<f64> = self.triangles.iter().map(|t| t.area()).collect();
        let total: f64 = areas.iter().sum();
        areas.iter().map(|a| a / total).collect()
    }

    /// The arc matrix: arcs only between points of the same triangle, by the
    /// proximity membership test.
    pub fn adjacency(&self) -> DigraphAdjacency {
        let n = self.n();
        // per-point precompute; the pair test is then two loads and a compare
        struct Pre {
            tri: usize,
            v: usize,
            thresh: f64,
            b: [f64; 3],
            at_vertex: bool,
        }
        let pre: Vec<Pre> = (0..n)
            .map(|i| {
                let tri = self.assignment[i];
                let t = &self.triangles[tri];
                let b = t.barycentric(self.sample[i]);
                let v = b.argmax();
                let thresh = if self.r.is_infinite() {
                    f64::INFINITY
                } else {
                    self.r.value() * (1.0 - b.as_array()[v])
                };
                let at_vertex = t.vertices().contains(&self.sample[i]);
                Pre { tri, v, thresh, b: b.as_array(), at_vertex }
            })
            .collect();
        let mut arcs = BitMatrix::zeros(n);
        for i in 0..n {
            let pi = &pre[i];
            for (j, pj) in pre.iter().enumerate() {
                if i == j || pj.tri != pi.tri {
                    continue;
                }
                let caught = if pi.at_vertex {
                    self.sample[j] == self.sample[i]
                } else if self.r.is_infinite() {
                    true
                } else {
                    1.0 - pj.b[pi.v] <= pi.thresh
                };
                if caught {
                    arcs.set(i, j, true);
                }
            }
        }
        debug_assert!((0..n.min(8)).all(|i| {
            (0..n.min(8)).all(|j| {
                i == j
                    || pre[j].tri != pre[i].tri
                    || arcs.get(i, j)
                        == in_proximity_region_unchecked(
                            &self.triangles[pre[i].tri],
                            self.r,
                            self.sample[i],
                            self.sample[j],
                        )
            })
        }));
        DigraphAdjacency { arcs }
    }
}

/// Result of a domination-number search.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Domination {
    pub value: usize,
    /// False when the exact search was cut off and `value` is the greedy
    /// upper bound.
    pub exact: bool,
}

/// Minimum number of vertices whose closed covers reach every vertex.
///
/// The cover of vertex i is itself plus its out-neighbors (`Kind::Arc`), its
/// AND-neighbors, or its OR-neighbors. Exact by exhaustive search of subsets
/// in lexicographic order up to `max_exact_k`, after forcing vertices that no
/// other vertex covers; past the cap the greedy bound is returned, flagged.
pub fn domination_number(d: &DigraphAdjacency, mode: Kind, max_exact_k: usize) -> Domination {
    let n = d.n();
    if n == 0 {
        return Domination { value: 0, exact: true };
    }
    let words = n.div_ceil(64);
    let full = {
        let mut v = vec![u64::MAX; words];
        if !n.is_multiple_of(64) {
            v[words - 1] = (1u64 << (n % 64)) - 1;
        }
        v
    };
    // closed cover rows
    let mut cover: Vec<Vec<u64>> = vec![vec![0; words]; n];
    for i in 0..n {
        cover[i][i / 64] |= 1 << (i % 64);
        for j in 0..n {
            if i == j {
                continue;
            }
            let e = match mode {
                Kind::Arc => d.arcs.get(i, j),
                Kind::And => d.arcs.get(i, j) && d.arcs.get(j, i),
                Kind::Or => d.arcs.get(i, j) || d.arcs.get(j, i),
            };
            if e {
                cover[i][j / 64] |= 1 << (j % 64);
            }
        }
    }

    // vertices covered by nobody else must be chosen
    let mut forced: Vec<usize> = Vec::new();
    let mut base = vec![0u64; words];
    for v in 0..n {
        let alone = (0..n).all(|i| i == v || cover[i][v / 64] >> (v % 64) & 1 == 0);
        if alone {
            forced.push(v);
            for w in 0..words {
                base[w] |= cover[v][w];
            }
        }
    }
    if base == full {
        return Domination { value: forced.len(), exact: true };
    }

    let is_full = |acc: &[u64]| acc == &full[..];
    let candidates: Vec<usize> = (0..n).filter(|v| !forced.contains(v)).collect();

    // greedy upper bound
    let greedy = {
        let mut acc = base.clone();
        let mut count = forced.len();
        while !is_full(&acc) {
            let best = candidates
                .iter()
                .max_by_key(|&&v| {
                    let gain: u32 =
                        (0..words).map(|w| (cover[v][w] & !acc[w]).count_ones()).sum();
                    (gain, usize::MAX - v) // lowest index on ties
                })
                .copied()
                .unwrap();
            for w in 0..words {
                acc[w] |= cover[best][w];
            }
            count += 1;
        }
        count
    };

    // exhaustive search over candidate subsets of increasing size
    let cap = max_exact_k.saturating_sub(forced.len()).min(candidates.len());
    for k in 1..=cap {
        if forced.len() + k >= greedy {
            break; // greedy already proves this k is optimal if reached
        }
        if subsets_cover(&candidates, &cover, &base, &full, k) {
            return Domination { value: forced.len() + k, exact: true };
        }
    }
    if forced.len() + cap >= greedy || cap == candidates.len() {
        return Domination { value: greedy, exact: true };
    }
    Domination { value: greedy, exact: false }
}

fn subsets_cover(
    candidates: &[usize],
    cover: &[Vec<u64>],
    base: &[u64],
    full: &[u64],
    k: usize,
) -> bool {
    let words = base.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut acc = base.to_vec();
        for &ii in &idx {
            let v = candidates[ii];
            for w in 0..words {
                acc[w] |= cover[v][w];
            }
        }
        if acc == full {
            return true;
        }
        // next lexicographic combination
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + candidates.len() - k {
                idx[pos] += 1;
                for q in pos + 1..k {
                    idx[q] = idx[q - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return false;
            }
        }
        if k == 0 {
            return false;
        }
    }
}

/// Joint empirical distribution of the kernel pair (h12, h13) over size-3
/// replicates.
///
/// Support values: arc counts 0, 1, 2 for the digraph kernel 2h (divide by
/// two for h), and 0, 1 for the AND/OR kernels.
#[derive(Clone, Debug, Serialize)]
pub struct KernelJointPmf {
    pub kind: Kind,
    /// `counts[i][j]` for (h12, h13) = (i, j) in kernel units (arcs for Arc).
    pub counts: [[u64; 3]; 3],
    pub replicates: u64,
}

impl KernelJointPmf {
    pub fn prob(&self, i: usize, j: usize) -> f64 {
        self.counts[i][j] as f64 / self.replicates as f64
    }

    pub fn support_len(&self) -> usize {
        match self.kind {
            Kind::Arc => 3,
            _ => 2,
        }
    }

    pub fn total_probability(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.support_len() {
            for j in 0..self.support_len() {
                s += self.prob(i, j);
            }
        }
        s
    }
}

/// Empirical joint pmf of (h12, h13) from replicated triples in a triangle.
pub fn joint_kernel_pmf(
    tri: &Triangle,
    r: Expansion,
    triples: &[[Point2; 3]],
    kind: Kind,
) -> Result<KernelJointPmf> {
    if triples.is_empty() {
        return Err(Error::InvalidReplicate { expected: 3, got: 0 });
    }
    let mut counts = [[0u64; 3]; 3];
    for t in triples {
        let g = |a: Point2, b: Point2| in_proximity_region_unchecked(tri, r, a, b);
        let (g12, g21) = (g(t[0], t[1]) as usize, g(t[1], t[0]) as usize);
        let (g13, g31) = (g(t[0], t[2]) as usize, g(t[2], t[0]) as usize);
        let (h12, h13) = match kind {
            Kind::Arc => (g12 + g21, g13 + g31),
            Kind::And => (g12 & g21, g13 & g31),
            Kind::Or => (g12 | g21, g13 | g31),
        };
        counts[h12][h13] += 1;
    }
    Ok(KernelJointPmf { kind, counts, replicates: triples.len() as u64 })
}

/// Erdos-Renyi random graph G(n, p) with a fixed seed.
pub fn er_random_graph(n: usize, p: f64, seed: u64) -> Result<EdgeSet> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::DomainError(format!("edge probability must be in [0,1], got {p}")));
    }
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut m = BitMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen::<f64>() < p {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    Ok(EdgeSet { kind: EdgeKind::Or, edges: m })
}
