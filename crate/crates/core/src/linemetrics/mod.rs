//! Edge-to-edge metrics on an implicit line-graph power: distances, the
//! line-graph diameter, strong-clique checking, the exact distance-t
//! edge-clique number via branch and bound, and a greedy upper bound on the
//! distance-t chromatic index.
//!
//! Distance convention: the distance between distinct edges e and f is
//! 1 + min over endpoints u of e and x of f of d_G(u, x). Parallel edges are
//! therefore at distance 1, and the endpoint set of a loop at u is {u}. The
//! power adjacency is never materialized beyond one bitset row per edge.

mod clique;
mod coloring;

pub use clique::{omega_line_power, CliqueCertificate, DEFAULT_NODE_BUDGET, OMEGA_EDGE_CAP};
pub use coloring::{chi_line_power_upper, Coloring};

use crate::error::{Error, Result};
use crate::graph::{Dist, EdgeRef, MultiGraph};

/// Indexed edge set of a multigraph with cached all-pairs vertex distances.
/// Index order matches [`MultiGraph::edges`] (ascending `(u, v, slot)`).
pub struct EdgeUniverse {
    edges: Vec<EdgeRef>,
    vdist: Vec<Vec<Dist>>,
    n: usize,
}

impl EdgeUniverse {
    pub fn new(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let vdist = (0..n as u32).map(|v| g.distances_from(v)).collect();
        EdgeUniverse {
            edges: g.edges(),
            vdist,
            n,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> EdgeRef {
        self.edges[i]
    }

    pub fn index_of(&self, e: EdgeRef) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn vertex_distance(&self, u: u32, v: u32) -> Dist {
        self.vdist[u as usize][v as usize]
    }

    /// Line-graph distance between edges by index: 0 for equal indices,
    /// otherwise 1 + min endpoint distance; `None` across components.
    pub fn distance(&self, i: usize, j: usize) -> Dist {
        if i == j {
            return Some(0);
        }
        let (e, f) = (self.edges[i], self.edges[j]);
        let mut best: Option<u32> = None;
        for u in e.endpoints() {
            for x in f.endpoints() {
                if let Some(d) = self.vdist[u as usize][x as usize] {
                    if best.map_or(true, |b| d < b) {
                        best = Some(d);
                    }
                }
            }
        }
        best.map(|d| d + 1)
    }

    /// True iff every pair of edges in `S` lies within line-graph distance
    /// `t` (distances measured in the host graph, not the induced subgraph).
    pub fn is_strong_clique(&self, t: u32, s: &[usize]) -> Result<bool> {
        for &i in s {
            if i >= self.edges.len() {
                return Err(Error::InvalidArgument(format!(
                    "edge index {i} out of range 0..{}",
                    self.edges.len()
                )));
            }
        }
        for (a, &i) in s.iter().enumerate() {
            for &j in &s[a + 1..] {
                match self.distance(i, j) {
                    Some(d) if d <= t => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// Per-edge bitsets over the edge universe marking pairs at line-graph
/// distance at most `t` (reflexive and symmetric).
pub struct PowerAdjacency {
    pub t: u32,
    words: usize,
    rows: Vec<u64>,
}

impl PowerAdjacency {
    pub fn build(u: &EdgeUniverse, t: u32) -> Self {
        let m = u.edge_count();
        let words = m.div_ceil(64).max(1);
        let mut rows = vec![0u64; m * words];
        for i in 0..m {
            for j in i..m {
                let close = matches!(u.distance(i, j), Some(d) if d <= t);
                if close {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                    rows[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        PowerAdjacency { t, words, rows }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    /// Degree in the power graph, excluding the reflexive bit.
    pub fn power_degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum::<usize>() - 1
    }
}

/// Line-graph distance between two edges of `g`; `None` across components.
pub fn edge_distance(g: &MultiGraph, e: EdgeRef, f: EdgeRef) -> Result<Dist> {
    for x in [e, f] {
        if !g.edge_exists(x) {
            return Err(Error::NonexistentEdge {
                u: x.u,
                v: x.v,
                slot: x.slot,
            });
        }
    }
    if e == f {
        return Ok(Some(0));
    }
    // One truncation-free BFS from the endpoint set of e.
    let layers = g.bfs_from_edge(e, g.vertex_count() as u32)?;
    let mut best: Option<u32> = None;
    for x in f.endpoints() {
        if let Some(d) = layers.dist[x as usize] {
            if best.map_or(true, |b| d < b) {
                best = Some(d);
            }
        }
    }
    Ok(best.map(|d| d + 1))
}

/// Maximum pairwise edge distance; `None` when the edges span more than one
/// component. Errors on an empty edge set.
pub fn line_diameter(g: &MultiGraph) -> Result<Dist> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidArgument(
            "line diameter of an empty edge set".into(),
        ));
    }
    let u = EdgeUniverse::new(g);
    let m = u.edge_count();
    let mut best = 0u32;
    for i in 0..m {
        for j in i + 1..m {
            match u.distance(i, j) {
                Some(d) => best = best.max(d),
                None => return Ok(None),
            }
        }
    }
    Ok(Some(best))
}

/// Cheap decision form of [`line_diameter`]: true iff every pair of edges is
/// within line-graph distance `t`. Vacuously true for fewer than two edges.
pub fn line_diameter_at_most(g: &MultiGraph, t: u32) -> bool {
    let edges = g.edges();
    if edges.len() <= 1 {
        return true;
    }
    if t == 0 {
        return false;
    }
    for (idx, &e) in edges.iter().enumerate() {
        // Vertices within distance t-1 of e's endpoints; every other edge
        // must touch one.
        let layers = g
            .bfs_from_edge(e, t - 1)
            .expect("edge from the graph's own edge list");
        let near = |v: u32| layers.dist[v as usize].is_some();
        for &f in &edges[idx + 1..] {
            if !f.endpoints().any(near) {
                return false;
            }
        }
    }
    true
}

/// Vertex diameter: `None` when disconnected (over positive-degree vertices)
/// or when the graph has no vertices.
pub fn graph_diameter(g: &MultiGraph) -> Dist {
    let n = g.vertex_count() as u32;
    if n == 0 {
        return None;
    }
    let mut best = 0u32;
    for v in 0..n {
        for d in g.distances_from(v) {
            match d {
                Some(x) => best = best.max(x),
                None => return None,
            }
        }
    }
    Some(best)
}

/// True iff `g` is regular of degree at least 2 with girth exactly `2t` and
/// vertex diameter exactly `t`. Degenerate 2-regular polygons qualify: the
/// hexagon passes for t = 3.
pub fn moore_like_check(g: &MultiGraph, t: u32) -> bool {
    let n = g.vertex_count() as u32;
    if n == 0 {
        return false;
    }
    let delta = g.degree(0);
    if delta < 2 || (1..n).any(|v| g.degree(v) != delta) {
        return false;
    }
    g.girth() == Some(2 * t) && graph_diameter(g) == Some(t)
}
