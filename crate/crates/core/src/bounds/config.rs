//! Local configuration bounds: the maximum number of edges within
//! line-distance t of an edge sitting in a named local pattern, computed by
//! budgeted tree completion rather than hard-coded.
//!
//! Every free degree slot at a pattern vertex x at distance i from the root
//! edge can grow one branch tree of height t - i, contributing
//! tree1_edges(t - i) edges inside the ball; the pattern's own edges all lie
//! inside. Identifying branch vertices only loses edges, so the tree-grown
//! count is the maximum.

use super::tree1_edges;
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, MultiGraph};

/// The named local configurations of the root edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConfigKind {
    /// Root edge lies in a triangle.
    Triangle,
    /// Root edge is a loop.
    Loop,
    /// Root edge has a parallel partner.
    Parallel,
    /// One endpoint of the root edge has degree at most 2.
    Degree2,
    /// Root edge lies in a 4-cycle.
    C4,
    /// Root edge lies in a 5-cycle.
    C5,
    /// No constraint beyond the degree bound: the full tree count, the case
    /// left for girth-6 hosts.
    Girth6,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 7] = [
        ConfigKind::Triangle,
        ConfigKind::Loop,
        ConfigKind::Parallel,
        ConfigKind::Degree2,
        ConfigKind::C4,
        ConfigKind::C5,
        ConfigKind::Girth6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::Triangle => "triangle",
            ConfigKind::Loop => "loop",
            ConfigKind::Parallel => "parallel",
            ConfigKind::Degree2 => "degree2",
            ConfigKind::C4 => "C4",
            ConfigKind::C5 => "C5",
            ConfigKind::Girth6 => "girth6",
        }
    }

    pub fn parse(s: &str) -> Option<ConfigKind> {
        Self::ALL.iter().copied().find(|k| k.name().eq_ignore_ascii_case(s))
    }
}

/// Maximum possible number of edges within line-distance `t` of an edge in
/// the given configuration, for host graphs of maximum degree `delta`.
pub fn config_edge_bound(kind: ConfigKind, t: u32, delta: u32) -> Result<u128> {
    if t < 1 || delta < 2 {
        return Err(Error::InvalidArgument(format!(
            "configuration bounds need t >= 1 and delta >= 2, got t={t} delta={delta}"
        )));
    }
    let (pattern, root, caps) = build_pattern(kind, delta)?;
    // Distance of every pattern vertex from the root edge's endpoint set.
    let layers = pattern
        .bfs_from_edge(root, t)
        .expect("root edge is in the pattern");
    let mut bound = pattern.edge_count() as u128;
    for v in 0..pattern.vertex_count() as u32 {
        let deg = pattern.degree(v);
        let cap = caps[v as usize];
        if deg > cap {
            return Err(Error::InvalidArgument(format!(
                "configuration {} impossible at delta={delta}: pattern degree {deg} exceeds {cap}",
                kind.name()
            )));
        }
        let slots = (cap - deg) as u128;
        if slots == 0 {
            continue;
        }
        let Some(dist) = layers.dist[v as usize] else {
            continue;
        };
        if dist >= t {
            continue;
        }
        let height = t - dist;
        bound += slots * tree1_edges(height, delta);
    }
    Ok(bound)
}

fn build_pattern(kind: ConfigKind, delta: u32) -> Result<(MultiGraph, EdgeRef, Vec<u32>)> {
    let simple_cycle = |len: usize| {
        let edges: Vec<(u32, u32)> = (0..len as u32).map(|i| (i, (i + 1) % len as u32)).collect();
        MultiGraph::from_edges(len, &edges).expect("cycle edges valid")
    };
    let root = EdgeRef::new(0, 1, 0);
    match kind {
        ConfigKind::Triangle => Ok((simple_cycle(3), root, vec![delta; 3])),
        ConfigKind::Loop => {
            let mut g = MultiGraph::new(1);
            g.add_edge(0, 0).expect("loop");
            Ok((g, EdgeRef::new(0, 0, 0), vec![delta; 1]))
        }
        ConfigKind::Parallel => {
            let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).expect("parallel pair");
            Ok((g, root, vec![delta; 2]))
        }
        ConfigKind::Degree2 => {
            let g = MultiGraph::from_edges(2, &[(0, 1)]).expect("edge");
            Ok((g, root, vec![delta, delta.min(2)]))
        }
        ConfigKind::C4 => Ok((simple_cycle(4), root, vec![delta; 4])),
        ConfigKind::C5 => Ok((simple_cycle(5), root, vec![delta; 5])),
        ConfigKind::Girth6 => {
            let g = MultiGraph::from_edges(2, &[(0, 1)]).expect("edge");
            Ok((g, root, vec![delta; 2]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subcubic_t3_constants() {
        let expected = [
            (ConfigKind::Triangle, 20),
            (ConfigKind::Loop, 8),
            (ConfigKind::Parallel, 16),
            (ConfigKind::Degree2, 22),
            (ConfigKind::C4, 24),
            (ConfigKind::C5, 26),
            (ConfigKind::Girth6, 29),
        ];
        for (kind, value) in expected {
            assert_eq!(
                config_edge_bound(kind, 3, 3).unwrap(),
                value,
                "{}",
                kind.name()
            );
        }
    }

    #[test]
    fn generalizes_to_other_parameters() {
        // Plain edge at (t, delta) = (2, 4): 1 + 2*3*(1+3) ... two endpoints
        // with 3 slots each growing height-2 branches of 1+3 edges.
        assert_eq!(config_edge_bound(ConfigKind::Girth6, 2, 4).unwrap(), 25);
        // Triangle at (2, 4): 3 pattern edges, endpoints grow 2 slots * 4,
        // the third vertex 2 slots * 1.
        assert_eq!(config_edge_bound(ConfigKind::Triangle, 2, 4).unwrap(), 21);
        // Loop at (1, 5): the loop plus 3 pendant edges.
        assert_eq!(config_edge_bound(ConfigKind::Loop, 1, 5).unwrap(), 4);
    }

    #[test]
    fn loop_impossible_below_degree_two() {
        // delta = 2 admits a loop exactly (degree 2), with no room to grow.
        assert_eq!(config_edge_bound(ConfigKind::Loop, 3, 2).unwrap(), 1);
        assert!(config_edge_bound(ConfigKind::Loop, 3, 1).is_err());
    }

    #[test]
    fn bounds_are_monotone_in_t() {
        for kind in ConfigKind::ALL {
            for delta in 2..=5 {
                let mut prev = 0;
                for t in 1..=4 {
                    let b = config_edge_bound(kind, t, delta).unwrap();
                    assert!(b >= prev);
                    prev = b;
                }
            }
        }
    }
}
