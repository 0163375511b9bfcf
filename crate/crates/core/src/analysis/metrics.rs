//! Impact metrics over a trace.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::cascade::CascadeChain;
use crate::analysis::events::{StatusEvent, StatusKind};
use crate::analysis::graph::DegradedModeSet;
use crate::models::names::{SUBSTATION, TANK};
use crate::models::{substation, tank};
use crate::scenario::Trace;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ImpactMetrics {
    /// Minutes spent in a degraded mode, per component.
    pub degraded_dwell: BTreeMap<String, f64>,
    /// Delay between the first root event and its first consequence (min).
    pub time_to_first_cascade: Option<f64>,
    /// Demand not served while the tank was empty (m^3).
    pub unserved_water: f64,
    /// Inflow in excess of demand while the tank was full (m^3).
    pub spill_volume: f64,
    /// Minutes the substation spent switched off.
    pub blackout_duration: f64,
    /// Components with at least one degradation event.
    pub components_affected: usize,
}

/// Left-endpoint rectangle sums: each row stands for the interval
/// `[t_k, t_k + dt)`.
pub fn compute_metrics(
    trace: &Trace,
    events: &[StatusEvent],
    chains: &[CascadeChain],
    degraded: &DegradedModeSet,
) -> ImpactMetrics {
    let dt = trace.dt();
    let rows_in = |node: &str, pred: &dyn Fn(&str) -> bool| -> Vec<usize> {
        trace
            .modes(node)
            .map_or_else(Vec::new, |ms| ms.iter().enumerate().filter(|(_, m)| pred(m)).map(|(i, _)| i).collect())
    };
    let degraded_dwell = degraded
        .components()
        .map(|c| (c.to_owned(), rows_in(c, &|m| degraded.is_degraded(c, m)).len() as f64 * dt))
        .collect();

    let value = |row: usize, col: &str| trace.value_at(row, col).unwrap_or(0.0);
    let unserved_water =
        rows_in(TANK, &|m| m == tank::DRAINED).into_iter().map(|r| value(r, "tank.w_d") * dt).fold(0.0, |a, v| a + v);
    let spill_volume = rows_in(TANK, &|m| m == tank::OVERFLOW)
        .into_iter()
        .map(|r| (value(r, "tank.w_s") - value(r, "tank.w_d")).max(0.0) * dt)
        .fold(0.0, |a, v| a + v);
    let blackout_duration = rows_in(SUBSTATION, &|m| m == substation::SWITCH_OFF).len() as f64 * dt;

    let time_to_first_cascade =
        chains.iter().find_map(|c| c.links.get(1).map(|l| events[l.event].t - events[c.root].t));
    let mut affected: Vec<&str> =
        events.iter().filter(|e| e.kind == StatusKind::Degradation).map(|e| e.node.as_str()).collect();
    affected.sort_unstable();
    affected.dedup();

    ImpactMetrics {
        degraded_dwell,
        time_to_first_cascade,
        unserved_water,
        spill_volume,
        blackout_duration,
        components_affected: affected.len(),
    }
}
