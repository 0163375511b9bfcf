//! Composition and simulation of open hybrid automata, with a bundled model of
//! an interdependent power, communication and water system and tools to trace
//! how faults cascade between them.
//!
//! The numeric core is generic over [`Scalar`] (`f32` or `f64`); the aliases at
//! the crate root fix it to `f64`, which is what the scenario engine and the
//! analysis use.

pub mod analysis;
pub mod composition;
pub mod hybrid;
pub mod models;
pub mod scalar;
pub mod scenario;

pub use scalar::Scalar;

pub type Automaton = hybrid::OpenHybridAutomaton<f64>;
pub type Automaton32 = hybrid::OpenHybridAutomaton<f32>;
pub type Network = composition::CompositionNetwork<f64>;
pub type Network32 = composition::CompositionNetwork<f32>;
pub type Junction = composition::JunctionBlock<f64>;
pub type NetworkState = composition::NetworkState<f64>;
