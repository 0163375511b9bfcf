//! Degradation and recovery events derived from a trace.

use serde::Serialize;

use crate::analysis::graph::DegradedModeSet;
use crate::scenario::Trace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StatusKind {
    Degradation,
    Recovery,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatusEvent {
    /// Position in the event list; chains refer to events by id.
    pub id: usize,
    pub t: f64,
    pub node: String,
    pub kind: StatusKind,
    /// `None` when the component starts the run degraded.
    pub from: Option<String>,
    pub to: String,
    pub guard: Option<String>,
    pub trigger: Option<String>,
}

/// One degradation event per entry into a degraded mode (including a move
/// between two degraded modes) and one recovery per exit to a healthy mode,
/// ordered by time then component name.
pub fn extract_events(trace: &Trace, degraded: &DegradedModeSet) -> Vec<StatusEvent> {
    let mut out = Vec::new();
    let t0 = trace.rows.first().map_or(0.0, |r| r.t);
    for node in degraded.components() {
        if let Some(mode) = trace.mode_at(0, node).filter(|m| degraded.is_degraded(node, m)) {
            out.push(StatusEvent {
                id: 0,
                t: t0,
                node: node.to_owned(),
                kind: StatusKind::Degradation,
                from: None,
                to: mode.to_owned(),
                guard: None,
                trigger: None,
            });
        }
    }
    for e in &trace.events {
        let kind = match (degraded.is_degraded(&e.node, &e.from), degraded.is_degraded(&e.node, &e.to)) {
            (_, true) => StatusKind::Degradation,
            (true, false) => StatusKind::Recovery,
            (false, false) => continue,
        };
        out.push(StatusEvent {
            id: 0,
            t: e.t,
            node: e.node.clone(),
            kind,
            from: Some(e.from.clone()),
            to: e.to.clone(),
            guard: Some(e.guard.clone()),
            trigger: Some(e.trigger.clone()),
        });
    }
    out.sort_by(|a, b| a.t.total_cmp(&b.t).then_with(|| a.node.cmp(&b.node)));
    for (i, e) in out.iter_mut().enumerate() {
        e.id = i;
    }
    out
}
