//! Greedy upper bound on the distance-t chromatic index: DSATUR over the
//! power adjacency. Ties break by power-graph degree, then lowest edge
//! index.

use super::{EdgeUniverse, PowerAdjacency};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// A proper coloring of the power adjacency: `assignment[i]` is the color of
/// edge index `i`; colors are `0..count`.
#[derive(Debug, Clone)]
pub struct Coloring {
    pub count: usize,
    pub assignment: Vec<u32>,
}

/// DSATUR-ordered greedy coloring of L(g)^t. The color count is an upper
/// bound on the distance-t chromatic index and never less than the clique
/// number of the same power graph.
pub fn chi_line_power_upper(g: &MultiGraph, t: u32) -> Result<Coloring> {
    let universe = EdgeUniverse::new(g);
    let m = universe.edge_count();
    if m == 0 {
        return Err(Error::InvalidArgument(
            "coloring of an empty edge set".into(),
        ));
    }
    let adj = PowerAdjacency::build(&universe, t);
    let degrees: Vec<usize> = (0..m).map(|i| adj.power_degree(i)).collect();
    let mut assignment: Vec<Option<u32>> = vec![None; m];
    let mut neighbor_colors: Vec<std::collections::BTreeSet<u32>> =
        vec![std::collections::BTreeSet::new(); m];
    for _ in 0..m {
        // Highest saturation, then highest power degree, then lowest index.
        let pick = (0..m)
            .filter(|&i| assignment[i].is_none())
            .max_by(|&a, &b| {
                (neighbor_colors[a].len(), degrees[a], std::cmp::Reverse(a)).cmp(&(
                    neighbor_colors[b].len(),
                    degrees[b],
                    std::cmp::Reverse(b),
                ))
            })
            .expect("an uncolored edge remains");
        let mut color = 0u32;
        while neighbor_colors[pick].contains(&color) {
            color += 1;
        }
        assignment[pick] = Some(color);
        for j in 0..m {
            if j != pick && adj.adjacent(pick, j) {
                neighbor_colors[j].insert(color);
            }
        }
    }
    let assignment: Vec<u32> = assignment.into_iter().map(|c| c.unwrap()).collect();
    let count = assignment.iter().max().map_or(0, |&c| c as usize + 1);
    // The assignment must be proper on the power adjacency.
    for i in 0..m {
        for j in i + 1..m {
            debug_assert!(
                !(adj.adjacent(i, j) && assignment[i] == assignment[j]),
                "improper coloring"
            );
        }
    }
    Ok(Coloring { count, assignment })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::heawood;
    use crate::linemetrics::{omega_line_power, DEFAULT_NODE_BUDGET};
    use crate::graph::MultiGraph;

    fn star(d: u32) -> MultiGraph {
        let edges: Vec<(u32, u32)> = (1..=d).map(|i| (0, i)).collect();
        MultiGraph::from_edges(d as usize + 1, &edges).unwrap()
    }

    #[test]
    fn star_needs_delta_colors() {
        for d in 2..6 {
            let c = chi_line_power_upper(&star(d), 1).unwrap();
            assert_eq!(c.count, d as usize);
        }
    }

    #[test]
    fn heawood_t3_complete_power() {
        let c = chi_line_power_upper(&heawood(), 3).unwrap();
        assert_eq!(c.count, 21);
    }

    #[test]
    fn c6_t2_needs_three() {
        let c6: Vec<(u32, u32)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = MultiGraph::from_edges(6, &c6).unwrap();
        let c = chi_line_power_upper(&g, 2).unwrap();
        assert_eq!(c.count, 3);
        // Brute force: no proper 2-coloring of the power graph exists.
        let u = EdgeUniverse::new(&g);
        let adj = PowerAdjacency::build(&u, 2);
        let m = u.edge_count();
        let mut two_colorable = false;
        'outer: for mask in 0u32..1 << m {
            for i in 0..m {
                for j in i + 1..m {
                    if adj.adjacent(i, j) && (mask >> i & 1) == (mask >> j & 1) {
                        continue 'outer;
                    }
                }
            }
            two_colorable = true;
            break;
        }
        assert!(!two_colorable);
    }

    #[test]
    fn never_below_clique_number() {
        let mut seed = 0x1234_5678u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..30 {
            let n = 3 + (next() % 8) as usize;
            let mut g = MultiGraph::new(n);
            for _ in 0..2 * n {
                let u = (next() % n as u64) as u32;
                let v = (next() % n as u64) as u32;
                if u != v {
                    g.add_edge(u, v).unwrap();
                }
            }
            if g.edge_count() == 0 {
                continue;
            }
            for t in 1..3 {
                let omega = omega_line_power(&g, t, DEFAULT_NODE_BUDGET).unwrap();
                let chi = chi_line_power_upper(&g, t).unwrap();
                assert!(chi.count >= omega.size);
            }
        }
    }
}
