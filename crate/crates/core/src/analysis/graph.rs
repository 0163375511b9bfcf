//! Component dependency graph and the per-component degraded modes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::composition::DependencyType;
use crate::models::names::{NETWORK, PUMP, SCADA, SUBSTATION, TANK};
use crate::scenario::NodeInfo;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub dependency: DependencyType,
}

/// Directed "depends on" edges: a fault at `from` can degrade `to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DependencyGraph {
    edges: Vec<Edge>,
}

impl DependencyGraph {
    pub fn new() -> Self {
        Self { edges: Vec::new() }
    }

    pub fn with_edge(mut self, from: &str, to: &str, dependency: DependencyType) -> Self {
        self.edges.push(Edge { from: from.to_owned(), to: to.to_owned(), dependency });
        self
    }

    /// Power feeds the pump and the network; the network relays every
    /// control signal; the pump fills the tank.
    pub fn micropolis() -> Self {
        use DependencyType::*;
        Self::new()
            .with_edge(SUBSTATION, NETWORK, Physical)
            .with_edge(SUBSTATION, PUMP, Physical)
            .with_edge(NETWORK, SUBSTATION, Cyber)
            .with_edge(NETWORK, SCADA, Cyber)
            .with_edge(NETWORK, PUMP, Cyber)
            .with_edge(NETWORK, TANK, Cyber)
            .with_edge(PUMP, TANK, Internal)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn nodes(&self) -> BTreeSet<&str> {
        self.edges.iter().flat_map(|e| [e.from.as_str(), e.to.as_str()]).collect()
    }

    /// Edge from `from` to `to`, if any.
    pub fn edge(&self, from: &str, to: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.from == from && e.to == to)
    }

    pub fn parents_of<'a>(&'a self, node: &'a str) -> impl Iterator<Item = &'a Edge> + 'a {
        self.edges.iter().filter(move |e| e.to == node)
    }
}

impl Default for DependencyGraph {
    fn default() -> Self {
        Self::micropolis()
    }
}

/// Modes counted as degraded, per component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegradedModeSet(pub BTreeMap<String, BTreeSet<String>>);

impl DegradedModeSet {
    /// SCADA `Open` is a protective response and is not included; network
    /// `UPSUsage` is, since it consumes the reserve.
    pub fn micropolis() -> Self {
        let set = |ms: &[&str]| ms.iter().map(|m| m.to_string()).collect();
        Self(
            [
                (SUBSTATION.to_owned(), set(&["SwitchOff"])),
                (SCADA.to_owned(), set(&["ConnDown"])),
                (NETWORK.to_owned(), set(&["UPSUsage", "NetDown"])),
                (TANK.to_owned(), set(&["Drained", "Overflow"])),
                (PUMP.to_owned(), set(&["Fault"])),
            ]
            .into(),
        )
    }

    pub fn is_degraded(&self, node: &str, mode: &str) -> bool {
        self.0.get(node).is_some_and(|s| s.contains(mode))
    }

    pub fn components(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    /// Checks every listed component and mode against the trace's nodes.
    pub fn check(&self, nodes: &[NodeInfo]) -> Result<(), String> {
        for (node, modes) in &self.0 {
            let info = nodes
                .iter()
                .find(|n| &n.name == node && !n.modes.is_empty())
                .ok_or_else(|| format!("degraded-mode set names unknown component `{node}`"))?;
            if let Some(m) = modes.iter().find(|m| !info.modes.contains(m)) {
                return Err(format!("`{node}` has no mode `{m}`"));
            }
        }
        Ok(())
    }
}

impl Default for DegradedModeSet {
    fn default() -> Self {
        Self::micropolis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_graph_shape() {
        let g = DependencyGraph::micropolis();
        assert_eq!(g.edges().len(), 7);
        assert_eq!(g.nodes().len(), 5);
        let tank: Vec<&str> = g.parents_of(TANK).map(|e| e.from.as_str()).collect();
        assert_eq!(tank, [NETWORK, PUMP]);
        assert_eq!(g.edge(PUMP, TANK).unwrap().dependency, DependencyType::Internal);
        assert!(g.edge(TANK, PUMP).is_none());
    }

    #[test]
    fn degraded_membership() {
        let d = DegradedModeSet::micropolis();
        assert!(d.is_degraded(NETWORK, "UPSUsage"));
        assert!(!d.is_degraded(SCADA, "Open"));
        assert!(!d.is_degraded("demand", "x"));
    }

    #[test]
    fn check_rejects_unknown_mode() {
        let nodes = vec![NodeInfo {
            name: PUMP.into(),
            modes: vec!["PumpOff".into(), "PumpOn".into(), "Fault".into()],
            continuous: vec![],
            inputs: vec![],
            outputs: vec![],
        }];
        let only_pump = DegradedModeSet([(PUMP.to_owned(), ["Fault".to_owned()].into())].into());
        only_pump.check(&nodes).unwrap();
        let bad = DegradedModeSet([(PUMP.to_owned(), ["Broken".to_owned()].into())].into());
        assert!(bad.check(&nodes).is_err());
        assert!(DegradedModeSet::micropolis().check(&nodes).is_err());
    }
}
