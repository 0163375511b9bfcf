//! Generic open hybrid automata: definition, validation and single-automaton
//! fixed-step execution.

pub mod automaton;
pub mod expr;
pub mod noise;

pub use automaton::{
    AutomatonBuilder, AutomatonState, ContinuousVar, DefinitionError, Direction, FiredTransition, ModeDefinition,
    ModeId, OpenHybridAutomaton, Port, PortKind, PortValues, StepError, StepOutcome, Transition, ZenoGuard,
};
pub use expr::{constant, input, noise, param, state, CmpOp, Expr, Pred, Scope, SymbolKind};
pub use noise::{NoiseSource, SeededNoise, Silent};
