//! Scenario files, fixed-step runs and the traces they produce.

pub mod config;
pub mod profile;
pub mod run;
pub mod trace;

use thiserror::Error;

use crate::models::ParamError;

pub use config::{load_scenario, InitialOverride, Profiles, Scenario, Schedules, Solver};
pub use profile::{Interp, Profile, Schedule};
pub use run::{build_network, exogenous_at, run, run_with, RunError, RunOptions};
pub use trace::{sig9, Cell, Event, NodeInfo, Trace, TraceError, TraceMeta, TraceRow};

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("{path}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{0}")]
    Invalid(#[from] ParamError),
}
