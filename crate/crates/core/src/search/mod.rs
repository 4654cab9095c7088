//! Isomorph-free exhaustive search over bounded-degree (multi)graphs.
//!
//! Both searches here run on the same engine: a leveled frontier holding one
//! canonical code per isomorphism class of partial graphs with m edges,
//! expanded level by level with monotone pruning. Levels are graded by edge
//! count, so the frontier is also the natural checkpoint unit, and set
//! semantics make results independent of thread schedule.
//!
//! The pruning rule the strong search lives by: two edges far apart in the
//! current partial graph are NOT prunable, because future edges can shorten
//! distances. What is sound is distance in the saturation potential (the
//! partial graph plus a clique on its degree-deficient vertices): adding
//! edges only ever touches deficient endpoints, so every completion's
//! distances dominate the potential's. All pruning here is of that monotone
//! kind, plus capacity counting.

mod checkpoint;
mod enumerate;
mod frontier;
mod h33;
mod strong;

pub use checkpoint::{checkpoint_resume, checkpoint_save, Checkpoint};
pub use enumerate::enumerate_regular_girth;
pub use h33::{verify_h33, H33Report, StepReport};
pub use strong::{max_edges_strong, StrongSearch};

use crate::error::{Error, Result};
use crate::graph::canon::CANON_VERTEX_CAP;
use crate::graph::codec::{encode, GraphFormat};
use crate::graph::MultiGraph;
use serde::Serialize;
use std::path::PathBuf;

/// Parameters of a strong-edge-set search.
#[derive(Debug, Clone, Serialize)]
pub struct SearchConfig {
    /// Maximum degree of the searched graphs.
    pub delta: u32,
    /// Line-graph power radius.
    pub t: u32,
    /// Largest vertex count explored.
    pub vertex_cap: u32,
    /// Optional early stop: report once this edge count is reached.
    pub edge_target: Option<u32>,
    /// Structural filter: smallest allowed girth.
    pub min_girth: Option<u32>,
    /// Structural filter: only degree-regular witnesses count.
    pub regular: bool,
    /// Allow parallel edges and loops.
    pub allow_multigraph: bool,
    /// Worker count for frontier expansion.
    pub threads: usize,
    /// Checkpoint file, saved at every level boundary when set.
    pub checkpoint: Option<PathBuf>,
    /// Abort (exhaustiveness flag false) after this many expansion nodes.
    pub node_budget: u64,
    /// Abort (exhaustiveness flag false) when a frontier level exceeds this
    /// many classes.
    pub max_frontier: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            delta: 3,
            t: 3,
            vertex_cap: 16,
            edge_target: None,
            min_girth: None,
            regular: false,
            allow_multigraph: false,
            threads: 1,
            checkpoint: None,
            node_budget: u64::MAX,
            max_frontier: 10_000_000,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.delta < 1 || self.t < 1 {
            return Err(Error::InfeasibleConfig(
                "need delta >= 1 and t >= 1".into(),
            ));
        }
        if self.vertex_cap < 2 || self.vertex_cap as usize > CANON_VERTEX_CAP {
            return Err(Error::InfeasibleConfig(format!(
                "vertex cap must lie in 2..={CANON_VERTEX_CAP}"
            )));
        }
        if self.allow_multigraph && self.min_girth.is_some_and(|g| g >= 3) {
            return Err(Error::InfeasibleConfig(
                "min girth >= 3 forbids parallel edges and loops; drop the multigraph flag".into(),
            ));
        }
        if self.threads == 0 {
            return Err(Error::InfeasibleConfig("threads must be >= 1".into()));
        }
        Ok(())
    }

    /// Stable hash of the semantically relevant fields, used to pair
    /// checkpoints with configurations.
    pub fn fingerprint(&self) -> [u8; 32] {
        use sha2::{Digest, Sha256};
        let repr = format!(
            "delta={};t={};cap={};target={:?};girth={:?};regular={};multi={}",
            self.delta,
            self.t,
            self.vertex_cap,
            self.edge_target,
            self.min_girth,
            self.regular,
            self.allow_multigraph
        );
        Sha256::digest(repr.as_bytes()).into()
    }
}

/// One extremal witness: the canonical code plus portable encodings.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub canonical_hex: String,
    pub sparse6: String,
    pub edge_list: String,
    pub vertices: usize,
    pub edges: usize,
}

impl Witness {
    pub(crate) fn from_graph(g: &MultiGraph) -> Self {
        Witness {
            canonical_hex: hex_bytes(g.canonical_code().expect("witness within cap").as_bytes()),
            sparse6: encode(g, GraphFormat::Sparse6).expect("sparse6 covers multigraphs"),
            edge_list: encode(g, GraphFormat::EdgeList).expect("edge list is total"),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        }
    }
}

pub(crate) fn hex_bytes(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Outcome of a search run.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalResult {
    pub best_edges: u32,
    pub witnesses: Vec<Witness>,
    /// True when the level structure was explored to the cap within budget:
    /// no graph satisfying the configuration exceeds `best_edges`.
    pub exhaustive: bool,
    pub nodes_explored: u64,
    pub wall_ms: u128,
    pub levels_completed: u32,
}
