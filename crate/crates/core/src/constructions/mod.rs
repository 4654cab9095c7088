//! Generators for the concrete graph families used as extremal witnesses:
//! incidence graphs of finite geometries, degree-constrained trees, the
//! five-cycle blow-up, the multiedge augmentation, and a hard-coded
//! 12-vertex witness for the substrong bound at t = 2, maximum degree 4.

pub mod field;
pub mod geometry;

pub use field::{FieldTable, FIELD_ORDER_CAP};
pub use geometry::{incidence_graph, projective_plane, symplectic_quadrangle, IncidenceStructure};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Rooted tree of height `k` whose root has degree `delta` and every other
/// non-leaf vertex has degree `delta`; the leaves are exactly the vertices
/// at distance `k` from the root (vertex 0).
pub fn tree_t(k: u32, delta: u32) -> MultiGraph {
    build_tree(k, delta, delta)
}

/// Same as [`tree_t`] with root degree 1: one branch of the full tree.
pub fn tree_t1(k: u32, delta: u32) -> MultiGraph {
    build_tree(k, delta, 1)
}

fn build_tree(k: u32, delta: u32, root_children: u32) -> MultiGraph {
    assert!(k >= 1 && delta >= 2, "need height >= 1 and degree >= 2");
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut next = 1u32;
    // (vertex, remaining height) queue; children count is delta-1 except at
    // the root.
    let mut frontier = vec![0u32];
    for depth in 0..k {
        let children = if depth == 0 { root_children } else { delta - 1 };
        let mut new_frontier = Vec::new();
        for &v in &frontier {
            for _ in 0..children {
                edges.push((v, next));
                new_frontier.push(next);
                next += 1;
            }
        }
        frontier = new_frontier;
    }
    MultiGraph::from_edges(next as usize, &edges).expect("tree edges are valid")
}

/// Blow-up of a five-cycle: five independent sets of size `delta/2` arranged
/// in a cycle with complete bipartite joins between consecutive sets. The
/// result is `delta`-regular with 5*delta^2/4 edges.
pub fn c5_blowup(delta: u32) -> Result<MultiGraph> {
    if delta < 2 || delta % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "five-cycle blow-up needs even degree >= 2, got {delta}"
        )));
    }
    let part = delta / 2;
    let n = 5 * part;
    let mut g = MultiGraph::new(n as usize);
    for side in 0..5u32 {
        let next = (side + 1) % 5;
        for i in 0..part {
            for j in 0..part {
                g.add_edge(side * part + i, next * part + j)?;
            }
        }
    }
    Ok(g)
}

/// Complete bipartite graph K_{a,b}: sides 0..a and a..a+b.
pub fn complete_bipartite(a: u32, b: u32) -> MultiGraph {
    let mut g = MultiGraph::new((a + b) as usize);
    for i in 0..a {
        for j in 0..b {
            g.add_edge(i, a + j).expect("indices in range");
        }
    }
    g
}

/// The 11-vertex, 22-edge, 4-regular witness showing the substrong bound for
/// t = 2 is attained: an apex (vertex 0) joined to four branch vertices
/// (1..=4); branches 1,2 each see all of one triple (5,6,7) and branches 3,4
/// all of the other (8,9,10); the triples are joined by a complete bipartite
/// graph minus the perfect matching 5-8, 6-9, 7-10. Every edge lies within
/// line-distance 2 of every apex edge, and 22 = substrong_max(2, 4).
pub fn figure2_graph() -> MultiGraph {
    let v = 0u32;
    let u = [1u32, 2, 3, 4];
    let upper = [5u32, 6, 7];
    let lower = [8u32, 9, 10];
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for &ui in &u {
        edges.push((v, ui));
    }
    for &ui in &u[..2] {
        for &a in &upper {
            edges.push((ui, a));
        }
    }
    for &ui in &u[2..] {
        for &b in &lower {
            edges.push((ui, b));
        }
    }
    for (i, &a) in upper.iter().enumerate() {
        for (j, &b) in lower.iter().enumerate() {
            if i != j {
                edges.push((a, b));
            }
        }
    }
    MultiGraph::from_edges(11, &edges).expect("hard-coded edges are valid")
}

/// Deletes a vertex `v` of degree `delta` (the maximum degree) and replaces
/// it by two fresh vertices joined by floor(delta/2) parallel edges, with
/// one fresh vertex adjacent to the lowest floor(delta/2) old neighbors of
/// `v` and the other to the remaining ceil(delta/2). Net edge change is
/// +floor(delta/2).
///
/// The two fresh vertices take the two highest ids of the result; the
/// returned mapping sends old ids to new ids (`None` for `v`).
pub fn multiedge_augment(g: &MultiGraph, v: u32) -> Result<(MultiGraph, Vec<Option<u32>>)> {
    let delta = g.max_degree();
    if v as usize >= g.vertex_count() {
        return Err(Error::InvalidVertex {
            v,
            n: g.vertex_count(),
        });
    }
    if delta < 2 || g.degree(v) != delta {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} has degree {}, expected the maximum degree {delta} >= 2",
            g.degree(v)
        )));
    }
    if g.loops(v) > 0 {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} carries a loop; the split is defined for loopless vertices"
        )));
    }
    // Neighbor slots of v sorted by neighbor id, multiplicity expanded.
    let mut slots: Vec<u32> = Vec::new();
    for (w, mult) in g.neighbors(v) {
        for _ in 0..mult {
            slots.push(w);
        }
    }
    slots.sort_unstable();
    let half = (delta / 2) as usize;

    let (mut out, map) = g.delete_vertex(v)?;
    let w1 = out.vertex_count() as u32;
    let w2 = w1 + 1;
    let mut with_fresh = MultiGraph::new(out.vertex_count() + 2);
    for e in out.edges() {
        with_fresh.add_edge(e.u, e.v)?;
    }
    out = with_fresh;
    for _ in 0..half {
        out.add_edge(w1, w2)?;
    }
    for (i, &old_nbr) in slots.iter().enumerate() {
        let new_nbr = map[old_nbr as usize].expect("neighbor of v is not v");
        let fresh = if i < half { w1 } else { w2 };
        out.add_edge(fresh, new_nbr)?;
    }
    Ok((out, map))
}

/// Incidence graph of the projective plane of order 2; the 14-vertex cubic
/// girth-6 cage.
pub fn heawood() -> MultiGraph {
    incidence_graph(&projective_plane(2).expect("2 is prime"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_edge_counts() {
        assert_eq!(tree_t(3, 3).edge_count(), 21);
        assert_eq!(tree_t1(3, 3).edge_count(), 7);
        assert_eq!(tree_t(1, 5).edge_count(), 5);
        assert_eq!(tree_t1(2, 3).edge_count(), 3);
        let t = tree_t(2, 4);
        assert_eq!(t.edge_count(), 4 + 12);
        assert_eq!(t.max_degree(), 4);
        assert_eq!(t.girth(), None);
        // Leaves are exactly the vertices at distance k from the root.
        let b = t.bfs_from_vertex(0, 2).unwrap();
        for v in 0..t.vertex_count() as u32 {
            let leaf = t.degree(v) == 1;
            assert_eq!(b.dist[v as usize] == Some(2), leaf && v != 0);
        }
    }

    #[test]
    fn c5_blowup_shapes() {
        let c5 = c5_blowup(2).unwrap();
        assert_eq!(c5.vertex_count(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.girth(), Some(5));

        let b4 = c5_blowup(4).unwrap();
        assert_eq!(b4.vertex_count(), 10);
        assert_eq!(b4.edge_count(), 20);
        assert!((0..10).all(|v| b4.degree(v) == 4));

        assert!(c5_blowup(3).is_err());
    }

    #[test]
    fn figure2_counts() {
        let g = figure2_graph();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 22);
        assert_eq!(g.max_degree(), 4);
        assert!((0..g.vertex_count() as u32).all(|v| g.degree(v) == 4));
        assert!(g.contains_cycle_length(5));
    }

    #[test]
    fn multiedge_augment_heawood() {
        let h = heawood();
        let (g, _) = multiedge_augment(&h, 0).unwrap();
        assert_eq!(g.edge_count(), 22);
        assert_eq!(g.max_degree(), 3);
        assert!(!g.is_simple());
        assert_eq!(g.multiplicity(13, 14), 1);
    }

    #[test]
    fn multiedge_augment_pg23() {
        let g4 = incidence_graph(&projective_plane(3).unwrap());
        assert_eq!(g4.edge_count(), 52);
        let (g, _) = multiedge_augment(&g4, 5).unwrap();
        assert_eq!(g.edge_count(), 54);
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.multiplicity(24, 25), 2);
    }

    #[test]
    fn multiedge_augment_cycle_degenerate() {
        // Degree 2: the multiedge has multiplicity 1, so the edge count is
        // unchanged (remove 2, add 3 including the joining edge... net +1
        // over the deletion, same total).
        let c4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (g, _) = multiedge_augment(&c4, 0).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn multiedge_augment_rejects_low_degree_vertex() {
        let mut g = MultiGraph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        // Vertex 1 has degree 1 < maximum degree 2.
        assert!(multiedge_augment(&g, 1).is_err());
        assert!(multiedge_augment(&g, 7).is_err());
    }

    #[test]
    fn complete_bipartite_shape() {
        let k33 = complete_bipartite(3, 3);
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(k33.girth(), Some(4));
    }
}
