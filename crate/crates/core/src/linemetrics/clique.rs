//! Exact maximum clique of the line-graph power by branch and bound over
//! bitset candidate sets, with greedy-coloring upper bounds: candidates are
//! colored greedily, branching proceeds from the highest color class
//! downward, and a branch is cut when |R| + color <= best. Ties break on the
//! lowest edge index, so results are deterministic.

use super::{EdgeUniverse, PowerAdjacency};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Hard cap on the edge count accepted by the solver.
pub const OMEGA_EDGE_CAP: usize = 4096;

/// Default branch-node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Result of a maximum-clique run. `members` is re-verified pairwise against
/// fresh distance computations before being returned.
#[derive(Debug, Clone)]
pub struct CliqueCertificate {
    pub members: Vec<usize>,
    pub size: usize,
    /// False when the node budget ran out; `size` is then only a lower bound.
    pub exact: bool,
    pub nodes_explored: u64,
}

struct Solver<'a> {
    adj: &'a PowerAdjacency,
    words: usize,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> Solver<'a> {
    fn expand(&mut self, cand: &[u64]) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let members: Vec<usize> = iter_bits(cand).collect();
        if members.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        // Greedy coloring in ascending index order; color classes bound the
        // clique size attainable from the candidates.
        let mut color_of = vec![0usize; members.len()];
        let mut class_masks: Vec<Vec<u64>> = Vec::new();
        for (mi, &v) in members.iter().enumerate() {
            let row = self.adj.row(v);
            let mut c = 0;
            while c < class_masks.len() && intersects(&class_masks[c], row) {
                c += 1;
            }
            if c == class_masks.len() {
                class_masks.push(vec![0u64; self.words]);
            }
            class_masks[c][v / 64] |= 1 << (v % 64);
            color_of[mi] = c + 1;
        }
        // Branch from the last (highest-colored) candidate down.
        let mut live = cand.to_vec();
        for mi in (0..members.len()).rev() {
            if self.current.len() + color_of[mi] <= self.best.len() {
                return;
            }
            let v = members[mi];
            let row = self.adj.row(v);
            let mut next = vec![0u64; self.words];
            for w in 0..self.words {
                next[w] = live[w] & row[w];
            }
            next[v / 64] &= !(1 << (v % 64));
            self.current.push(v);
            self.expand(&next);
            self.current.pop();
            if self.exhausted {
                return;
            }
            live[v / 64] &= !(1 << (v % 64));
        }
    }
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(&x, &y)| x & y != 0)
}

fn iter_bits(mask: &[u64]) -> impl Iterator<Item = usize> + '_ {
    mask.iter().enumerate().flat_map(|(w, &bits)| {
        let mut b = bits;
        std::iter::from_fn(move || {
            if b == 0 {
                return None;
            }
            let i = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(w * 64 + i)
        })
    })
}

/// Exact maximum clique of L(g)^t, as edge indices of the edge universe.
/// When the node budget is exhausted the best clique found so far is
/// returned with `exact = false`.
pub fn omega_line_power(g: &MultiGraph, t: u32, budget: u64) -> Result<CliqueCertificate> {
    if t < 1 {
        return Err(Error::InvalidArgument("power radius t must be >= 1".into()));
    }
    let universe = EdgeUniverse::new(g);
    let m = universe.edge_count();
    if m > OMEGA_EDGE_CAP {
        return Err(Error::CapExceeded {
            what: "clique solver edges",
            limit: OMEGA_EDGE_CAP,
            got: m,
        });
    }
    if m == 0 {
        return Ok(CliqueCertificate {
            members: Vec::new(),
            size: 0,
            exact: true,
            nodes_explored: 0,
        });
    }
    let adj = PowerAdjacency::build(&universe, t);
    let words = adj.words();
    let mut solver = Solver {
        adj: &adj,
        words,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    let mut all = vec![0u64; words];
    for i in 0..m {
        all[i / 64] |= 1 << (i % 64);
    }
    solver.expand(&all);
    let mut members = solver.best;
    members.sort_unstable();
    // Independent re-verification of the emitted certificate.
    if !universe.is_strong_clique(t, &members)? {
        return Err(Error::InvalidArgument(
            "internal error: clique certificate failed re-verification".into(),
        ));
    }
    Ok(CliqueCertificate {
        size: members.len(),
        members,
        exact: !solver.exhausted,
        nodes_explored: solver.nodes,
    })
}
