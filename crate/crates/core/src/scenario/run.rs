//! Fixed-step execution of a scenario.

use thiserror::Error;

use crate::composition::{CompositionError, CompositionNetwork, Exogenous, Node};
use crate::hybrid::{AutomatonState, SeededNoise};
use crate::models::micropolis::MicropolisError;
use crate::models::{make_micropolis, names, ParamError};
use crate::scalar::Scalar;
use crate::scenario::config::Scenario;
use crate::scenario::trace::{sig9, Cell, Event, NodeInfo, Trace, TraceMeta, TraceRow};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("invalid scenario: {0}")]
    Invalid(#[from] ParamError),
    #[error("simulation failed: {0}")]
    Simulation(#[from] CompositionError),
}

impl From<MicropolisError> for RunError {
    fn from(e: MicropolisError) -> Self {
        match e {
            MicropolisError::Param(p) => RunError::Invalid(p),
            MicropolisError::Composition(c) => RunError::Simulation(c),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Registers the nodes in this order (names) instead of the default.
    /// Results must not depend on it.
    pub node_order: Option<Vec<String>>,
    /// Overrides the scenario seed.
    pub seed: Option<u64>,
}

/// Runs the scenario in `f64`.
pub fn run(scenario: &Scenario) -> Result<Trace, RunError> {
    run_with::<f64>(scenario, &RunOptions::default())
}

/// The composed network a scenario runs on.
pub fn build_network<T: Scalar>(scenario: &Scenario) -> Result<CompositionNetwork<T>, RunError> {
    let mut net = make_micropolis::<T>(&scenario.params(), T::from_f64_lossy(scenario.solver.dt))?;
    net.set_max_consecutive_jumps(scenario.solver.max_consecutive_jumps);
    Ok(net)
}

/// Exogenous inputs at clock `t`.
pub fn exogenous_at<T: Scalar>(scenario: &Scenario, t: f64) -> Exogenous<T> {
    let v = T::from_f64_lossy;
    let one = |port: &str, x: f64| [(port.to_owned(), v(x))].into();
    [
        (names::DEMAND.to_owned(), one("d_city", scenario.profiles.d_city.sample(t))),
        (names::TANK.to_owned(), one("w_d", scenario.profiles.w_d.sample(t))),
        (names::SCADA.to_owned(), one("s_OP", scenario.schedules.s_op.sample(t))),
        (names::NETWORK.to_owned(), one("phi_n", scenario.schedules.phi_n.sample(t))),
        (names::PUMP.to_owned(), one("phi_p", scenario.schedules.phi_p.sample(t))),
    ]
    .into()
}

fn initial_states<T: Scalar>(
    scenario: &Scenario,
    net: &CompositionNetwork<T>,
) -> Result<Vec<Option<AutomatonState<T>>>, RunError> {
    net.nodes()
        .iter()
        .map(|n| {
            let Some(a) = n.as_automaton() else { return Ok(None) };
            let mut s = a.initial_state();
            if let Some(o) = scenario.initial.get(a.name()) {
                let field = |f: &str| format!("initial.{}.{f}", a.name());
                if let Some(m) = &o.mode {
                    s.mode =
                        a.mode_id(m).ok_or_else(|| ParamError::new(field("mode"), format!("unknown mode `{m}`")))?;
                }
                for (var, &value) in &o.state {
                    let i = a.var_index(var).ok_or_else(|| ParamError::new(field(var), "unknown state variable"))?;
                    s.x[i] = T::from_f64_lossy(value);
                }
            }
            Ok(Some(s))
        })
        .collect()
}

fn node_info<T: Scalar>(node: &Node<T>) -> NodeInfo {
    let names = |ports: &[crate::hybrid::Port]| ports.iter().map(|p| p.name.clone()).collect();
    let (modes, continuous) = match node.as_automaton() {
        Some(a) => (
            a.modes().iter().map(|m| m.name.clone()).collect(),
            a.continuous_vars().iter().map(|v| v.name.clone()).collect(),
        ),
        None => (Vec::new(), Vec::new()),
    };
    NodeInfo {
        name: node.name().to_owned(),
        modes,
        continuous,
        inputs: names(node.input_ports()),
        outputs: names(node.output_ports()),
    }
}

fn columns(nodes: &[NodeInfo]) -> Vec<String> {
    let mut cols = Vec::new();
    for n in nodes {
        if !n.modes.is_empty() {
            cols.push(format!("{}.mode", n.name));
        }
        for c in n.continuous.iter().chain(&n.inputs).chain(&n.outputs) {
            cols.push(format!("{}.{c}", n.name));
        }
    }
    cols
}

/// Runs the scenario with scalar type `T`, recording values as `f64`.
///
/// Row `k` holds the clock `k dt`, each automaton's mode and continuous state
/// at that time, and the inputs and outputs of the step taken from it. A jump
/// during step `k` becomes an event at `(k + 1) dt`; jumps in the step after
/// the final row are not recorded.
pub fn run_with<T: Scalar>(scenario: &Scenario, options: &RunOptions) -> Result<Trace, RunError> {
    scenario.validate()?;
    let mut net = build_network::<T>(scenario)?;
    if let Some(order) = &options.node_order {
        let idx = order
            .iter()
            .map(|n| net.node_index(n).ok_or_else(|| CompositionError::UnknownNode(n.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        net = net.with_node_order(&idx)?;
    }
    let solver = &scenario.solver;
    let seed = options.seed.unwrap_or(solver.seed);
    let dt = T::from_f64_lossy(solver.dt);

    let mut by_name: Vec<usize> = (0..net.nodes().len()).collect();
    by_name.sort_by(|&a, &b| net.nodes()[a].name().cmp(net.nodes()[b].name()));
    let infos: Vec<NodeInfo> = by_name.iter().map(|&i| node_info(&net.nodes()[i])).collect();
    let cols = columns(&infos);

    let mut state = net.state_from(initial_states(scenario, &net)?, &exogenous_at(scenario, 0.0))?;
    let mut noise = SeededNoise::new(seed);
    let steps = solver.steps();
    let mut rows = Vec::with_capacity(steps as usize + 1);
    let mut events = Vec::new();
    for k in 0..=steps {
        let t = solver.time_of(k);
        let snap = net.step(&mut state, &exogenous_at(scenario, t), dt, &mut noise)?;
        let mut cells = Vec::with_capacity(cols.len());
        for (&i, info) in by_name.iter().zip(&infos) {
            let s = &snap.nodes[i];
            let a = net.nodes()[i].as_automaton();
            if let (Some(a), Some(m)) = (a, s.mode) {
                cells.push(Cell::Mode(a.mode_name(m).to_owned()));
            }
            cells.extend(s.x.iter().map(|v| Cell::Value(sig9(v.as_f64()))));
            for p in &info.inputs {
                cells.push(Cell::Value(sig9(s.inputs[p].as_f64())));
            }
            for p in &info.outputs {
                cells.push(Cell::Value(sig9(s.outputs[p].as_f64())));
            }
            if let (Some(a), Some(f)) = (a, &s.fired) {
                if k < steps {
                    events.push(Event {
                        t: sig9(solver.time_of(k + 1)),
                        node: info.name.clone(),
                        from: a.mode_name(f.from).to_owned(),
                        to: a.mode_name(f.to).to_owned(),
                        guard: f.label.clone(),
                        trigger: f.trigger.clone(),
                    });
                }
            }
        }
        rows.push(TraceRow { t: sig9(t), cells });
    }
    log::debug!("scenario {}: {} rows, {} events", scenario.hash(), rows.len(), events.len());
    Ok(Trace {
        meta: TraceMeta {
            scenario_hash: scenario.hash(),
            seed,
            dt: solver.dt,
            t_end: solver.t_end,
            rows: rows.len(),
            columns: cols,
            nodes: infos,
        },
        rows,
        events,
    })
}
