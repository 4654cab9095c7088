//! The leveled canonical-frontier engine shared by the enumerator and the
//! strong search. Levels are graded by edge count: every expansion adds
//! exactly one edge, the frontier at level m holds one canonical code per
//! isomorphism class reached, and a hash set collapses duplicates as they
//! are produced.
//!
//! Correctness rests on two facts. Completeness: every rule set's expansion
//! can realize any valid target from any of its subgraph partials, so the
//! first representative of a class to enter the frontier already reaches
//! every completion class. Soundness of skipping: isomorphic partials have
//! isomorphic completion sets, so later representatives of a seen class add
//! nothing.
//!
//! Parallel mode splits each level into chunks; chunk results are merged by
//! set union and counter sums, so the outcome does not depend on the
//! schedule.

use crate::graph::canon::{canonical_code, CanonicalCode};
use crate::graph::MultiGraph;
use rayon::prelude::*;
use std::collections::HashSet;

pub(crate) trait FrontierRules: Sync {
    /// Inclusive edge-count ceiling.
    fn level_cap(&self) -> u32;
    /// Level-1 seeds.
    fn initial(&self) -> Vec<MultiGraph>;
    /// Whether a frontier representative is a search target.
    fn is_target(&self, g: &MultiGraph) -> bool;
    /// Children of a representative (one added edge each). `best` is the
    /// best target level seen so far, fixed for the whole level.
    fn expand(&self, g: &MultiGraph, best: Option<u32>, out: &mut Vec<MultiGraph>);
}

pub(crate) struct Engine<R: FrontierRules> {
    pub rules: R,
    /// Sorted canonical codes of the current level's classes.
    pub frontier: Vec<Vec<u8>>,
    /// Edge count of frontier members.
    pub level: u32,
    pub best: Option<u32>,
    /// Canonical codes of the targets at level `best`.
    pub witnesses: Vec<Vec<u8>>,
    pub nodes: u64,
    pub aborted: bool,
    pool: Option<rayon::ThreadPool>,
    node_budget: u64,
    max_frontier: usize,
}

pub(crate) fn decode(code: &[u8]) -> MultiGraph {
    CanonicalCode::from_bytes(code.to_vec())
        .decode()
        .expect("frontier codes decode")
}

impl<R: FrontierRules> Engine<R> {
    pub fn new(rules: R, threads: usize, node_budget: u64, max_frontier: usize) -> Self {
        let mut seen = HashSet::new();
        let mut frontier = Vec::new();
        for g in rules.initial() {
            debug_assert_eq!(g.edge_count(), 1, "seeds carry one edge");
            let code = canonical_code(&g).expect("seed within cap").into_bytes();
            if seen.insert(code.clone()) {
                frontier.push(code);
            }
        }
        frontier.sort_unstable();
        let pool = (threads > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool")
        });
        Engine {
            rules,
            frontier,
            level: 1,
            best: None,
            witnesses: Vec::new(),
            nodes: 0,
            aborted: false,
            pool,
            node_budget,
            max_frontier,
        }
    }

    /// Restores engine position from checkpointed state.
    pub fn restore(
        &mut self,
        level: u32,
        frontier: Vec<Vec<u8>>,
        best: Option<u32>,
        witnesses: Vec<Vec<u8>>,
        nodes: u64,
    ) {
        self.level = level;
        self.frontier = frontier;
        self.best = best;
        self.witnesses = witnesses;
        self.nodes = nodes;
    }

    pub fn done(&self) -> bool {
        self.aborted || self.frontier.is_empty() || self.level > self.rules.level_cap()
    }

    /// Processes one level: records targets, then expands with the updated
    /// best as the pruning threshold. Returns false when the run is over.
    pub fn step(&mut self) -> bool {
        if self.done() {
            return false;
        }
        let rules = &self.rules;
        // Visit phase: which classes at this level are targets.
        let visit = |codes: &[Vec<u8>]| -> Vec<Vec<u8>> {
            codes
                .iter()
                .filter(|c| rules.is_target(&decode(c)))
                .cloned()
                .collect()
        };
        let mut targets: Vec<Vec<u8>> = match &self.pool {
            Some(pool) => pool.install(|| {
                self.frontier
                    .par_chunks(chunk_size(self.frontier.len(), true))
                    .map(visit)
                    .reduce(Vec::new, |mut a, mut b| {
                        a.append(&mut b);
                        a
                    })
            }),
            None => visit(&self.frontier),
        };
        if !targets.is_empty() {
            targets.sort_unstable();
            self.best = Some(self.level);
            self.witnesses = targets;
        }
        if self.level == self.rules.level_cap() {
            self.frontier = Vec::new();
            self.level += 1;
            return false;
        }
        // Expansion phase; the threshold is fixed for the whole level.
        let best = self.best;
        let expand = |codes: &[Vec<u8>]| -> (u64, HashSet<Vec<u8>>) {
            let mut out = HashSet::new();
            let mut children = Vec::new();
            let mut attempts = 0u64;
            for code in codes {
                let g = decode(code);
                children.clear();
                rules.expand(&g, best, &mut children);
                attempts += children.len() as u64;
                for child in &children {
                    out.insert(canonical_code(child).expect("child within cap").into_bytes());
                }
            }
            (attempts, out)
        };
        let (attempts, merged) = match &self.pool {
            Some(pool) => pool.install(|| {
                self.frontier
                    .par_chunks(chunk_size(self.frontier.len(), false))
                    .map(expand)
                    .reduce(
                        || (0, HashSet::new()),
                        |(na, mut sa), (nb, sb)| {
                            if sa.len() < sb.len() {
                                let mut sb = sb;
                                sb.extend(sa);
                                return (na + nb, sb);
                            }
                            sa.extend(sb);
                            (na + nb, sa)
                        },
                    )
            }),
            None => expand(&self.frontier),
        };
        self.nodes += attempts;
        let mut next: Vec<Vec<u8>> = merged.into_iter().collect();
        next.sort_unstable();
        self.frontier = next;
        self.level += 1;
        if self.nodes > self.node_budget || self.frontier.len() > self.max_frontier {
            self.aborted = true;
        }
        !self.done()
    }

    pub fn run(&mut self) {
        while self.step() {}
    }
}

fn chunk_size(len: usize, fine: bool) -> usize {
    let parts = if fine { 64 } else { 256 };
    (len / parts).max(64)
}
