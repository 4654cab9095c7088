//! Exact computations for the edge version of the degree-diameter problem.
//!
//! The toolkit answers questions of the form: how many edges can a graph of
//! maximum degree Δ carry while its line graph has diameter at most t? It
//! provides:
//!
//! - [`graph`]: a compact multigraph with BFS machinery, girth and cycle
//!   predicates, canonical forms for isomorph rejection, and graph6/sparse6
//!   codecs;
//! - [`constructions`]: the extremal graph families (projective-plane and
//!   symplectic-quadrangle incidence graphs, degree-constrained trees,
//!   five-cycle blow-ups, and friends);
//! - [`linemetrics`]: edge-to-edge distances, line-graph-power diameters,
//!   distance-t edge-clique numbers via branch and bound, and greedy
//!   distance-t chromatic-index upper bounds;
//! - [`bounds`]: exact closed-form bound evaluators and executable verifiers
//!   for the supporting counting arguments;
//! - [`search`]: isomorph-free exhaustive search over bounded-degree graphs,
//!   including the full pipeline that pins down the subcubic t = 3 extremal
//!   value at 22 edges.
//!
//! Convention note: an edge set is called *strong* for radius t when all its
//! edges lie pairwise at line-graph distance at most t, i.e. the edge set
//! induces a clique in L(G)^t. Everything here uses this operative
//! definition. For Δ = 2 and t = 1 it disagrees with the older phrasing
//! "shortest path joining two edges has length >= t" (a triangle's edges are
//! pairwise adjacent yet joined by paths of length 0); the clique definition
//! is the one under which all formulas below are stated.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod linemetrics;
pub mod search;

pub use error::{Error, Result};
pub use graph::{BfsLayers, BfsSource, Dist, EdgeRef, MultiGraph};
