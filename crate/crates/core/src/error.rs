use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {v} out of range (graph has {n} vertices)")]
    InvalidVertex { v: u32, n: usize },

    #[error("edge ({u},{v}) slot {slot} does not exist")]
    NonexistentEdge { u: u32, v: u32, slot: u32 },

    #[error("{what} cap exceeded: limit {limit}, got {got}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("parse error at {at}: {msg}")]
    Parse { at: String, msg: String },

    #[error("format {format} cannot represent this graph: {why}")]
    FormatUnsupported {
        format: &'static str,
        why: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("infeasible configuration: {0}")]
    InfeasibleConfig(String),

    #[error("checkpoint rejected: {0}")]
    Checkpoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
