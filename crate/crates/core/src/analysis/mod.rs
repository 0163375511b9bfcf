//! Cascade analysis: degradation events, causal chains along dependency
//! edges, and impact metrics.

pub mod cascade;
pub mod events;
pub mod graph;
pub mod metrics;

use serde::Serialize;

pub use cascade::{build_cascade, CascadeChain, ChainLink, RootCause};
pub use events::{extract_events, StatusEvent, StatusKind};
pub use graph::{DegradedModeSet, DependencyGraph, Edge};
pub use metrics::{compute_metrics, ImpactMetrics};

use crate::scenario::Trace;

/// Everything written to `cascade.json`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CascadeReport {
    pub degraded_modes: DegradedModeSet,
    pub graph: DependencyGraph,
    pub events: Vec<StatusEvent>,
    pub chains: Vec<CascadeChain>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Analysis {
    pub report: CascadeReport,
    pub metrics: ImpactMetrics,
}

/// Runs the full analysis with the given graph and degraded-mode set.
pub fn analyze(trace: &Trace, graph: &DependencyGraph, degraded: &DegradedModeSet) -> Result<Analysis, String> {
    degraded.check(&trace.meta.nodes)?;
    let events = extract_events(trace, degraded);
    let chains = build_cascade(&events, graph);
    let metrics = compute_metrics(trace, &events, &chains, degraded);
    Ok(Analysis {
        report: CascadeReport { degraded_modes: degraded.clone(), graph: graph.clone(), events, chains },
        metrics,
    })
}

/// [`analyze`] with the default graph and degraded modes.
pub fn analyze_default(trace: &Trace) -> Analysis {
    analyze(trace, &DependencyGraph::micropolis(), &DegradedModeSet::micropolis())
        .expect("default degraded modes match the bundled models")
}

impl Analysis {
    pub fn cascade_json(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("report serializes") + "\n"
    }

    pub fn metrics_json(&self) -> String {
        serde_json::to_string_pretty(&self.metrics).expect("metrics serialize") + "\n"
    }
}
