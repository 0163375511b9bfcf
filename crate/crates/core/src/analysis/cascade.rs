//! Causal chains of degradation events along dependency edges.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::events::{StatusEvent, StatusKind};
use crate::analysis::graph::DependencyGraph;
use crate::composition::DependencyType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootCause {
    /// A scheduled fault input (`phi_n`, `phi_p`).
    InjectedFault,
    /// A power-limit guard.
    OverloadGuard,
    /// Operator commands, demand, or the initial condition.
    Exogenous,
}

impl RootCause {
    fn classify(event: &StatusEvent) -> Self {
        let trigger = event.trigger.as_deref().unwrap_or("");
        if trigger.contains("phi_n") || trigger.contains("phi_p") {
            RootCause::InjectedFault
        } else if trigger.contains("P_lim") {
            RootCause::OverloadGuard
        } else {
            RootCause::Exogenous
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainLink {
    pub event: usize,
    /// `None` for the root.
    pub parent: Option<usize>,
    pub dependency: Option<DependencyType>,
    /// Other events that were also eligible as parent.
    pub other_parents: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CascadeChain {
    pub root: usize,
    pub root_cause: RootCause,
    /// Root first, then descendants in event order.
    pub links: Vec<ChainLink>,
}

impl CascadeChain {
    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }
}

/// Current degradation episode of a component.
#[derive(Clone, Copy)]
struct Episode {
    start: f64,
    latest: usize,
}

/// Assigns each degradation event a parent: among components with an edge
/// into the event's component that are degraded at that moment (entered
/// earlier in time-then-name order and not yet recovered), the one whose
/// degradation began first, ties broken by name. The link points at that
/// component's most recent degradation event. Events without an eligible
/// parent start a new chain.
pub fn build_cascade(events: &[StatusEvent], graph: &DependencyGraph) -> Vec<CascadeChain> {
    let mut active: BTreeMap<&str, Episode> = BTreeMap::new();
    let mut links: Vec<Option<ChainLink>> = vec![None; events.len()];
    let mut root_of = vec![0usize; events.len()];
    let mut roots = Vec::new();

    for (i, e) in events.iter().enumerate() {
        match e.kind {
            StatusKind::Recovery => {
                active.remove(e.node.as_str());
            }
            StatusKind::Degradation => {
                let mut eligible: Vec<(f64, &str, usize, DependencyType)> = graph
                    .parents_of(&e.node)
                    .filter_map(|edge| {
                        active
                            .get(edge.from.as_str())
                            .map(|ep| (ep.start, edge.from.as_str(), ep.latest, edge.dependency))
                    })
                    .collect();
                eligible.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(b.1)));
                let link = match eligible.split_first() {
                    Some((&(_, _, parent, dep), rest)) => {
                        root_of[i] = root_of[parent];
                        ChainLink {
                            event: i,
                            parent: Some(parent),
                            dependency: Some(dep),
                            other_parents: rest.iter().map(|p| p.2).collect(),
                        }
                    }
                    None => {
                        root_of[i] = i;
                        roots.push(i);
                        ChainLink { event: i, parent: None, dependency: None, other_parents: Vec::new() }
                    }
                };
                links[i] = Some(link);
                let start = active.get(e.node.as_str()).map_or(e.t, |ep| ep.start);
                active.insert(e.node.as_str(), Episode { start, latest: i });
            }
        }
    }

    roots
        .into_iter()
        .map(|r| CascadeChain {
            root: r,
            root_cause: RootCause::classify(&events[r]),
            links: links
                .iter()
                .enumerate()
                .filter(|(i, l)| l.is_some() && root_of[*i] == r)
                .filter_map(|(_, l)| l.clone())
                .collect(),
        })
        .collect()
}
