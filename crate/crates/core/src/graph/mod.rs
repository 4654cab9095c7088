//! Compact undirected multigraph with loops, plus the BFS machinery and
//! structural predicates everything else is built on.
//!
//! Conventions fixed here and used throughout the crate:
//! - a loop contributes 2 to the degree of its vertex;
//! - vertex ids are dense integers `0..n`; deleting a vertex renumbers and
//!   reports the mapping;
//! - unreachable distances are `None`, never a large magic number.

pub mod canon;
pub mod codec;

use crate::error::{Error, Result};

/// Distance value: `None` means unreachable (or beyond the requested depth).
pub type Dist = Option<u32>;

/// A reference to one edge of a [`MultiGraph`], with `u <= v` and `slot`
/// indexing parallel copies (`slot < multiplicity(u,v)`, or `< loops(u)` when
/// `u == v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub u: u32,
    pub v: u32,
    pub slot: u32,
}

impl EdgeRef {
    /// Builds a normalized reference (orientation `u <= v`).
    pub fn new(a: u32, b: u32, slot: u32) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        EdgeRef { u, v, slot }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint vertex set: `{u, v}`, or `{u}` for a loop.
    pub fn endpoints(&self) -> impl Iterator<Item = u32> {
        let second = if self.u == self.v { None } else { Some(self.v) };
        std::iter::once(self.u).chain(second)
    }
}

/// Source of a BFS run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfsSource {
    Vertex(u32),
    Edge(EdgeRef),
}

/// Exact distance layers from a vertex or an edge.
///
/// `layers[i]` is the set of vertices at distance exactly `i` from the
/// source; `dist[v]` is `None` for vertices unreachable within the requested
/// depth.
#[derive(Debug, Clone)]
pub struct BfsLayers {
    pub source: BfsSource,
    pub layers: Vec<Vec<u32>>,
    pub dist: Vec<Dist>,
}

impl BfsLayers {
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }
}

/// Compact undirected multigraph with loops.
///
/// Adjacency is stored as per-vertex sorted `(neighbor, multiplicity)` lists
/// plus a per-vertex loop count. The structure is kept symmetric under every
/// mutation and the edge count is cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    adj: Vec<Vec<(u32, u32)>>,
    loops: Vec<u32>,
    m: usize,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            adj: vec![Vec::new(); n],
            loops: vec![0; n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list; `(u,u)` entries are loops.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.adj.len() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                v,
                n: self.adj.len(),
            })
        }
    }

    /// Adds one edge (or one loop when `u == v`), incrementing multiplicity.
    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            self.loops[u as usize] += 1;
        } else {
            Self::bump(&mut self.adj[u as usize], v);
            Self::bump(&mut self.adj[v as usize], u);
        }
        self.m += 1;
        Ok(())
    }

    fn bump(list: &mut Vec<(u32, u32)>, w: u32) {
        match list.binary_search_by_key(&w, |&(x, _)| x) {
            Ok(i) => list[i].1 += 1,
            Err(i) => list.insert(i, (w, 1)),
        }
    }

    /// Removes one parallel copy of `u v` (or one loop when `u == v`).
    pub fn remove_edge(&mut self, u: u32, v: u32) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            if self.loops[u as usize] == 0 {
                return Err(Error::NonexistentEdge { u, v, slot: 0 });
            }
            self.loops[u as usize] -= 1;
        } else {
            if self.multiplicity(u, v) == 0 {
                return Err(Error::NonexistentEdge { u, v, slot: 0 });
            }
            Self::drop_one(&mut self.adj[u as usize], v);
            Self::drop_one(&mut self.adj[v as usize], u);
        }
        self.m -= 1;
        Ok(())
    }

    fn drop_one(list: &mut Vec<(u32, u32)>, w: u32) {
        if let Ok(i) = list.binary_search_by_key(&w, |&(x, _)| x) {
            if list[i].1 > 1 {
                list[i].1 -= 1;
            } else {
                list.remove(i);
            }
        }
    }

    pub fn multiplicity(&self, u: u32, v: u32) -> u32 {
        if u == v {
            return self.loops.get(u as usize).copied().unwrap_or(0);
        }
        self.adj
            .get(u as usize)
            .and_then(|l| {
                l.binary_search_by_key(&v, |&(x, _)| x)
                    .ok()
                    .map(|i| l[i].1)
            })
            .unwrap_or(0)
    }

    pub fn loops(&self, v: u32) -> u32 {
        self.loops[v as usize]
    }

    /// Neighbors of `v` (excluding `v` itself) as `(neighbor, multiplicity)`.
    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj[v as usize].iter().copied()
    }

    /// Degree with the loop-counts-twice convention.
    pub fn degree(&self, v: u32) -> u32 {
        self.adj[v as usize].iter().map(|&(_, m)| m).sum::<u32>() + 2 * self.loops[v as usize]
    }

    pub fn max_degree(&self) -> u32 {
        (0..self.vertex_count() as u32)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut d: Vec<u32> = (0..self.vertex_count() as u32)
            .map(|v| self.degree(v))
            .collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_simple(&self) -> bool {
        self.loops.iter().all(|&c| c == 0)
            && self
                .adj
                .iter()
                .all(|l| l.iter().all(|&(_, mult)| mult == 1))
    }

    pub fn edge_exists(&self, e: EdgeRef) -> bool {
        if e.u > e.v || e.v as usize >= self.vertex_count() {
            return false;
        }
        e.slot < self.multiplicity(e.u, e.v)
    }

    fn check_edge(&self, e: EdgeRef) -> Result<()> {
        if self.edge_exists(e) {
            Ok(())
        } else {
            Err(Error::NonexistentEdge {
                u: e.u,
                v: e.v,
                slot: e.slot,
            })
        }
    }

    /// All edges in canonical order: ascending `(u, v, slot)`, loops included.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.vertex_count() as u32 {
            for slot in 0..self.loops[u as usize] {
                out.push(EdgeRef { u, v: u, slot });
            }
            for &(v, mult) in &self.adj[u as usize] {
                if v > u {
                    for slot in 0..mult {
                        out.push(EdgeRef { u, v, slot });
                    }
                }
            }
        }
        out
    }

    /// The lexicographically least edge, if any.
    pub fn first_edge(&self) -> Option<EdgeRef> {
        self.edges().into_iter().next()
    }

    /// Full BFS from `v`: distance to every vertex (`None` = unreachable).
    pub fn distances_from(&self, v: u32) -> Vec<Dist> {
        let n = self.vertex_count();
        let mut dist: Vec<Dist> = vec![None; n];
        let mut queue = std::collections::VecDeque::new();
        dist[v as usize] = Some(0);
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            for &(w, _) in &self.adj[u as usize] {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn layers_from_seed(&self, seed: &[u32], depth: u32, source: BfsSource) -> BfsLayers {
        let n = self.vertex_count();
        let mut dist: Vec<Dist> = vec![None; n];
        let mut layers: Vec<Vec<u32>> = vec![seed.to_vec()];
        for &s in seed {
            dist[s as usize] = Some(0);
        }
        let mut frontier = seed.to_vec();
        let mut d = 0;
        while d < depth && !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                for &(w, _) in &self.adj[u as usize] {
                    if dist[w as usize].is_none() {
                        dist[w as usize] = Some(d + 1);
                        next.push(w);
                    }
                }
            }
            next.sort_unstable();
            d += 1;
            if next.is_empty() {
                break;
            }
            layers.push(next.clone());
            frontier = next;
        }
        BfsLayers {
            source,
            layers,
            dist,
        }
    }

    /// Exact distance layers from `v` up to `depth`. Vertices farther than
    /// `depth` are left unreachable-at-depth (`None`).
    pub fn bfs_from_vertex(&self, v: u32, depth: u32) -> Result<BfsLayers> {
        self.check_vertex(v)?;
        Ok(self.layers_from_seed(&[v], depth, BfsSource::Vertex(v)))
    }

    /// Distance layers from an edge: layer 0 is the endpoint set of `e`
    /// (a single vertex for a loop).
    pub fn bfs_from_edge(&self, e: EdgeRef, depth: u32) -> Result<BfsLayers> {
        self.check_edge(e)?;
        let seed: Vec<u32> = e.endpoints().collect();
        Ok(self.layers_from_seed(&seed, depth, BfsSource::Edge(e)))
    }

    /// Length of a shortest cycle: loop = 1, parallel pair = 2, forests have
    /// none (`None`).
    pub fn girth(&self) -> Option<u32> {
        if self.loops.iter().any(|&c| c > 0) {
            return Some(1);
        }
        if self
            .adj
            .iter()
            .any(|l| l.iter().any(|&(_, mult)| mult >= 2))
        {
            return Some(2);
        }
        let n = self.vertex_count();
        let mut best: Option<u32> = None;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        for r in 0..n as u32 {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            parent.iter_mut().for_each(|p| *p = u32::MAX);
            dist[r as usize] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(r);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // No shorter cycle can be found past half the best length.
                    if dist[u as usize] * 2 >= b {
                        continue;
                    }
                }
                for &(w, _) in &self.adj[u as usize] {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = dist[u as usize] + 1;
                        parent[w as usize] = u;
                        queue.push_back(w);
                    } else if w != parent[u as usize] {
                        let len = dist[u as usize] + dist[w as usize] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// True iff the graph has a cycle of length exactly `len` as a subgraph
    /// (vertices distinct; loop = length 1, parallel pair = length 2).
    pub fn contains_cycle_length(&self, len: u32) -> bool {
        match len {
            0 => false,
            1 => self.loops.iter().any(|&c| c > 0),
            2 => self
                .adj
                .iter()
                .any(|l| l.iter().any(|&(_, mult)| mult >= 2)),
            _ => {
                let n = self.vertex_count() as u32;
                for s in 0..n {
                    // Cycles whose minimum vertex is s; search within {v >= s}.
                    let dist_s = self.distances_from(s);
                    let mut on_path = vec![false; n as usize];
                    on_path[s as usize] = true;
                    if self.cycle_dfs(s, s, 0, len, &mut on_path, &dist_s) {
                        return true;
                    }
                }
                false
            }
        }
    }

    fn cycle_dfs(
        &self,
        s: u32,
        u: u32,
        steps: u32,
        len: u32,
        on_path: &mut Vec<bool>,
        dist_s: &[Dist],
    ) -> bool {
        for &(w, _) in &self.adj[u as usize] {
            if w == s {
                if steps + 1 == len {
                    return true;
                }
                continue;
            }
            if w < s || on_path[w as usize] || steps + 1 >= len {
                continue;
            }
            // Must be able to return to s in the remaining steps.
            match dist_s[w as usize] {
                Some(d) if d <= len - steps - 1 => {}
                _ => continue,
            }
            on_path[w as usize] = true;
            if self.cycle_dfs(s, w, steps + 1, len, on_path, dist_s) {
                on_path[w as usize] = false;
                return true;
            }
            on_path[w as usize] = false;
        }
        false
    }

    /// True iff all vertices with positive degree lie in one component
    /// (graphs with no edges count as connected).
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count() as u32;
        let Some(start) = (0..n).find(|&v| self.degree(v) > 0) else {
            return true;
        };
        let dist = self.distances_from(start);
        (0..n).all(|v| self.degree(v) == 0 || dist[v as usize].is_some())
    }

    /// Replaces edge `e` by a path of length 2 through a fresh vertex.
    pub fn subdivide_edge(&self, e: EdgeRef) -> Result<MultiGraph> {
        self.check_edge(e)?;
        let w = self.vertex_count() as u32;
        let mut g = self.clone();
        g.adj.push(Vec::new());
        g.loops.push(0);
        g.remove_edge(e.u, e.v)?;
        g.add_edge(e.u, w)?;
        g.add_edge(e.v, w)?;
        Ok(g)
    }

    /// Deletes vertex `v`, renumbering densely. Returns the new graph and the
    /// old-id -> new-id mapping (`None` for the deleted vertex).
    pub fn delete_vertex(&self, v: u32) -> Result<(MultiGraph, Vec<Option<u32>>)> {
        self.check_vertex(v)?;
        let n = self.vertex_count();
        let mut map: Vec<Option<u32>> = Vec::with_capacity(n);
        let mut next = 0u32;
        for old in 0..n as u32 {
            if old == v {
                map.push(None);
            } else {
                map.push(Some(next));
                next += 1;
            }
        }
        let mut g = MultiGraph::new(n - 1);
        for old in 0..n as u32 {
            let Some(new_u) = map[old as usize] else {
                continue;
            };
            g.loops[new_u as usize] = self.loops[old as usize];
            g.m += self.loops[old as usize] as usize;
            for &(w, mult) in &self.adj[old as usize] {
                if w > old {
                    if let Some(new_w) = map[w as usize] {
                        for _ in 0..mult {
                            g.add_edge(new_u, new_w)?;
                        }
                    }
                }
            }
        }
        Ok((g, map))
    }
}
