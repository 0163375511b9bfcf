//! Composition of open hybrid automata: latched connections, delay lines and
//! junction blocks.

pub mod delay;
pub mod junction;
pub mod network;

use thiserror::Error;

use crate::hybrid::{Direction, StepError};

pub use delay::{steps_for, DelayLine};
pub use junction::{JunctionBlock, JunctionKind};
pub use network::{
    CompositionNetwork, Connection, DependencyType, Endpoint, Exogenous, FreePort, NetworkState, Node, NodeSnapshot,
    Snapshot, DEFAULT_MAX_CONSECUTIVE_JUMPS,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CompositionError {
    #[error("node `{0}` already exists")]
    DuplicateNode(String),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("node `{node}` has no port `{port}`")]
    UnknownPort { node: String, port: String },
    #[error("port `{node}.{port}` is not an {expected:?} port")]
    DirectionMismatch { node: String, port: String, expected: Direction },
    #[error("input `{node}.{port}` is already connected")]
    AlreadyConnected { node: String, port: String },
    #[error("no exogenous value for free input `{node}.{port}`")]
    MissingExogenous { node: String, port: String },
    #[error("invalid junction `{node}`: {reason}")]
    InvalidJunction { node: String, reason: String },
    #[error("delay line capacity must be at least one step")]
    ZeroCapacity,
    #[error("network state does not match the composition ({got} vs {expected} nodes)")]
    StateShape { expected: usize, got: usize },
    #[error("node `{node}`: {source}")]
    Node {
        node: String,
        #[source]
        source: StepError,
    },
    #[error("node `{node}`: non-finite value of `{var}` at step {step}")]
    NonFiniteState { node: String, var: String, step: u64 },
    #[error("node `{node}` jumped on more than {limit} consecutive steps (aborted at step {step})")]
    Zeno { node: String, step: u64, limit: u32 },
}
