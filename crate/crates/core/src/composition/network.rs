//! Latched composition of automata and junction blocks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::delay::DelayLine;
use crate::composition::junction::JunctionBlock;
use crate::composition::CompositionError;
use crate::hybrid::{
    AutomatonState, Direction, FiredTransition, ModeId, NoiseSource, OpenHybridAutomaton, Port, PortKind, PortValues,
    Silent, ZenoGuard,
};
use crate::scalar::Scalar;

pub const DEFAULT_MAX_CONSECUTIVE_JUMPS: u32 = 1000;

/// Values for free inputs, keyed by node then port.
pub type Exogenous<T> = BTreeMap<String, PortValues<T>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DependencyType {
    Physical,
    Cyber,
    Logical,
    Internal,
}

impl DependencyType {
    pub const ALL: [DependencyType; 4] =
        [DependencyType::Physical, DependencyType::Cyber, DependencyType::Logical, DependencyType::Internal];

    pub fn as_str(self) -> &'static str {
        match self {
            DependencyType::Physical => "physical",
            DependencyType::Cyber => "cyber",
            DependencyType::Logical => "logical",
            DependencyType::Internal => "internal",
        }
    }
}

impl fmt::Display for DependencyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub enum Node<T> {
    Automaton(OpenHybridAutomaton<T>),
    Junction(JunctionBlock<T>),
}

impl<T: Scalar> Node<T> {
    pub fn name(&self) -> &str {
        match self {
            Node::Automaton(a) => a.name(),
            Node::Junction(j) => j.name(),
        }
    }

    pub fn input_ports(&self) -> &[Port] {
        match self {
            Node::Automaton(a) => a.input_ports(),
            Node::Junction(j) => j.input_ports(),
        }
    }

    pub fn output_ports(&self) -> &[Port] {
        match self {
            Node::Automaton(a) => a.output_ports(),
            Node::Junction(j) => std::slice::from_ref(j.output_port()),
        }
    }

    pub fn as_automaton(&self) -> Option<&OpenHybridAutomaton<T>> {
        match self {
            Node::Automaton(a) => Some(a),
            Node::Junction(_) => None,
        }
    }

    fn port(&self, name: &str, direction: Direction) -> Option<&Port> {
        let ports = match direction {
            Direction::Input => self.input_ports(),
            Direction::Output => self.output_ports(),
        };
        ports.iter().find(|p| p.name == name)
    }
}

impl<T> From<OpenHybridAutomaton<T>> for Node<T> {
    fn from(a: OpenHybridAutomaton<T>) -> Self {
        Node::Automaton(a)
    }
}

impl<T> From<JunctionBlock<T>> for Node<T> {
    fn from(j: JunctionBlock<T>) -> Self {
        Node::Junction(j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Endpoint {
    pub node: String,
    pub port: String,
}

impl Endpoint {
    pub fn new(node: &str, port: &str) -> Self {
        Self { node: node.to_owned(), port: port.to_owned() }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.node, self.port)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connection {
    pub source: Endpoint,
    pub destination: Endpoint,
    pub dependency: DependencyType,
    /// Transmission delay in whole steps on top of the unit-delay latch.
    pub extra_delay: usize,
}

impl Connection {
    /// Steps between emission at the source and reception at the destination.
    pub fn latency(&self) -> usize {
        1 + self.extra_delay
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreePort {
    pub node: String,
    pub port: String,
    pub direction: Direction,
}

/// Nodes wired through latched connections. Immutable once built.
#[derive(Clone, Debug)]
pub struct CompositionNetwork<T> {
    nodes: Vec<Node<T>>,
    connections: Vec<Connection>,
    /// (node index, input port) -> connection index
    incoming: HashMap<(usize, String), usize>,
    /// Node indices sorted by name; fixes the noise draw order.
    step_order: Vec<usize>,
    max_consecutive_jumps: u32,
}

impl<T: Scalar> Default for CompositionNetwork<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Per-node view of one step.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeSnapshot<T> {
    /// Mode during the step (before any jump); `None` for junction blocks.
    pub mode: Option<ModeId>,
    /// Continuous state at the start of the step.
    pub x: Vec<T>,
    pub inputs: PortValues<T>,
    pub outputs: PortValues<T>,
    pub fired: Option<FiredTransition>,
    pub invariant_violated: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Snapshot<T> {
    pub step: u64,
    pub t: T,
    pub nodes: Vec<NodeSnapshot<T>>,
}

/// Mutable execution state of a network: automaton states, latch contents
/// and the clock.
#[derive(Clone, Debug, PartialEq)]
pub struct NetworkState<T> {
    states: Vec<Option<AutomatonState<T>>>,
    lines: Vec<DelayLine<T>>,
    zeno: Vec<ZenoGuard>,
    steps: u64,
    clock: T,
}

impl<T: Scalar> NetworkState<T> {
    pub fn time(&self) -> T {
        self.clock
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn automaton_state(&self, node: usize) -> Option<&AutomatonState<T>> {
        self.states.get(node).and_then(Option::as_ref)
    }

    pub fn line(&self, connection: usize) -> &DelayLine<T> {
        &self.lines[connection]
    }
}

impl<T: Scalar> CompositionNetwork<T> {
    pub fn new() -> Self {
        Self {
            nodes: Vec::new(),
            connections: Vec::new(),
            incoming: HashMap::new(),
            step_order: Vec::new(),
            max_consecutive_jumps: DEFAULT_MAX_CONSECUTIVE_JUMPS,
        }
    }

    pub fn set_max_consecutive_jumps(&mut self, limit: u32) {
        self.max_consecutive_jumps = limit;
    }

    pub fn max_consecutive_jumps(&self) -> u32 {
        self.max_consecutive_jumps
    }

    pub fn nodes(&self) -> &[Node<T>] {
        &self.nodes
    }

    pub fn connections(&self) -> &[Connection] {
        &self.connections
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.name() == name)
    }

    pub fn node(&self, name: &str) -> Option<&Node<T>> {
        self.node_index(name).map(|i| &self.nodes[i])
    }

    pub fn add_node(&mut self, node: impl Into<Node<T>>) -> Result<(), CompositionError> {
        let node = node.into();
        if self.node_index(node.name()).is_some() {
            return Err(CompositionError::DuplicateNode(node.name().to_owned()));
        }
        self.nodes.push(node);
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| self.nodes[a].name().cmp(self.nodes[b].name()));
        self.step_order = order;
        Ok(())
    }

    /// Same composition with the nodes registered in `order` (indices into
    /// [`nodes`](Self::nodes)). Connections keep their relative order.
    pub fn with_node_order(&self, order: &[usize]) -> Result<Self, CompositionError> {
        let mut seen = vec![false; self.nodes.len()];
        for &i in order {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(CompositionError::StateShape { expected: self.nodes.len(), got: order.len() });
            }
        }
        if order.len() != self.nodes.len() {
            return Err(CompositionError::StateShape { expected: self.nodes.len(), got: order.len() });
        }
        let mut net = Self::new();
        net.max_consecutive_jumps = self.max_consecutive_jumps;
        for &i in order {
            net.add_node(self.nodes[i].clone())?;
        }
        for c in &self.connections {
            net.connect_delayed(
                (&c.source.node, &c.source.port),
                (&c.destination.node, &c.destination.port),
                c.dependency,
                c.extra_delay,
            )?;
        }
        Ok(net)
    }

    pub fn connect(
        &mut self,
        source: (&str, &str),
        destination: (&str, &str),
        dependency: DependencyType,
    ) -> Result<(), CompositionError> {
        self.connect_delayed(source, destination, dependency, 0)
    }

    /// Like [`connect`](Self::connect) with `extra_delay` additional steps of
    /// transmission delay after the latch.
    pub fn connect_delayed(
        &mut self,
        source: (&str, &str),
        destination: (&str, &str),
        dependency: DependencyType,
        extra_delay: usize,
    ) -> Result<(), CompositionError> {
        let (src_node, src_port) = source;
        let (dst_node, dst_port) = destination;
        let si = self.node_index(src_node).ok_or_else(|| CompositionError::UnknownNode(src_node.to_owned()))?;
        let di = self.node_index(dst_node).ok_or_else(|| CompositionError::UnknownNode(dst_node.to_owned()))?;
        self.check_port(si, src_port, Direction::Output)?;
        self.check_port(di, dst_port, Direction::Input)?;
        let key = (di, dst_port.to_owned());
        if self.incoming.contains_key(&key) {
            return Err(CompositionError::AlreadyConnected { node: dst_node.to_owned(), port: dst_port.to_owned() });
        }
        self.incoming.insert(key, self.connections.len());
        self.connections.push(Connection {
            source: Endpoint::new(src_node, src_port),
            destination: Endpoint::new(dst_node, dst_port),
            dependency,
            extra_delay,
        });
        Ok(())
    }

    fn check_port(&self, node: usize, port: &str, direction: Direction) -> Result<(), CompositionError> {
        let n = &self.nodes[node];
        if n.port(port, direction).is_some() {
            return Ok(());
        }
        let other = match direction {
            Direction::Input => Direction::Output,
            Direction::Output => Direction::Input,
        };
        if n.port(port, other).is_some() {
            Err(CompositionError::DirectionMismatch {
                node: n.name().to_owned(),
                port: port.to_owned(),
                expected: direction,
            })
        } else {
            Err(CompositionError::UnknownPort { node: n.name().to_owned(), port: port.to_owned() })
        }
    }

    /// Unconnected ports: inputs without a driver and outputs that feed
    /// nothing, in node insertion order then port order.
    pub fn free_ports(&self) -> Vec<FreePort> {
        let mut out = Vec::new();
        for (i, n) in self.nodes.iter().enumerate() {
            for p in n.input_ports() {
                if !self.incoming.contains_key(&(i, p.name.clone())) {
                    out.push(FreePort { node: n.name().to_owned(), port: p.name.clone(), direction: Direction::Input });
                }
            }
            for p in n.output_ports() {
                let used = self.connections.iter().any(|c| c.source.node == n.name() && c.source.port == p.name);
                if !used {
                    out.push(FreePort {
                        node: n.name().to_owned(),
                        port: p.name.clone(),
                        direction: Direction::Output,
                    });
                }
            }
        }
        out
    }

    pub fn free_inputs(&self) -> Vec<FreePort> {
        self.free_ports().into_iter().filter(|p| p.direction == Direction::Input).collect()
    }

    fn gather_inputs(
        &self,
        node: usize,
        read_line: impl Fn(usize) -> T,
        exogenous: &Exogenous<T>,
    ) -> Result<PortValues<T>, CompositionError> {
        let n = &self.nodes[node];
        let mut values = PortValues::new();
        for p in n.input_ports() {
            let v = match self.incoming.get(&(node, p.name.clone())) {
                Some(&c) => read_line(c),
                None => exogenous.get(n.name()).and_then(|m| m.get(&p.name)).copied().ok_or_else(|| {
                    CompositionError::MissingExogenous { node: n.name().to_owned(), port: p.name.clone() }
                })?,
            };
            values.insert(p.name.clone(), v);
        }
        Ok(values)
    }

    fn node_error(&self, node: usize, source: crate::hybrid::StepError) -> CompositionError {
        CompositionError::Node { node: self.nodes[node].name().to_owned(), source }
    }

    /// Initial state using each automaton's declared initial mode and state.
    pub fn initial_state(&self, exogenous: &Exogenous<T>) -> Result<NetworkState<T>, CompositionError> {
        let states = self.nodes.iter().map(|n| n.as_automaton().map(OpenHybridAutomaton::initial_state)).collect();
        self.state_from(states, exogenous)
    }

    /// Initial state with per-node overrides of the automaton states.
    ///
    /// Every latch is primed with its source's output at t = 0, found by
    /// re-evaluating all (noise-free) output maps until the latched values
    /// stop changing. Measurement, command and power lines therefore start
    /// consistent with the initial modes instead of at an arbitrary idle value.
    pub fn state_from(
        &self,
        states: Vec<Option<AutomatonState<T>>>,
        exogenous: &Exogenous<T>,
    ) -> Result<NetworkState<T>, CompositionError> {
        if states.len() != self.nodes.len() {
            return Err(CompositionError::StateShape { expected: self.nodes.len(), got: states.len() });
        }
        for (i, (n, s)) in self.nodes.iter().zip(&states).enumerate() {
            if n.as_automaton().is_some() != s.is_some() {
                return Err(CompositionError::StateShape { expected: self.nodes.len(), got: i });
            }
        }
        let mut values = vec![T::zero(); self.connections.len()];
        for _ in 0..=self.nodes.len() {
            let mut outputs: Vec<PortValues<T>> = Vec::with_capacity(self.nodes.len());
            for (i, n) in self.nodes.iter().enumerate() {
                let inputs = self.gather_inputs(i, |c| values[c], exogenous)?;
                outputs.push(self.evaluate_node(i, n, states[i].as_ref(), &inputs, &mut Silent)?);
            }
            let next: Vec<T> = self.connections.iter().map(|c| self.output_of(&outputs, &c.source)).collect();
            let settled = next == values;
            values = next;
            if settled {
                break;
            }
        }
        let lines = self
            .connections
            .iter()
            .zip(&values)
            .map(|(c, &v)| DelayLine::new(c.latency(), v))
            .collect::<Result<_, _>>()?;
        Ok(NetworkState {
            states,
            lines,
            zeno: vec![ZenoGuard::new(self.max_consecutive_jumps); self.nodes.len()],
            steps: 0,
            clock: T::zero(),
        })
    }

    fn evaluate_node(
        &self,
        i: usize,
        node: &Node<T>,
        state: Option<&AutomatonState<T>>,
        inputs: &PortValues<T>,
        noise: &mut dyn NoiseSource<T>,
    ) -> Result<PortValues<T>, CompositionError> {
        match node {
            Node::Automaton(a) => {
                let s = state.expect("automaton node has a state");
                a.evaluate_outputs(s, inputs, noise).map_err(|e| self.node_error(i, e))
            }
            Node::Junction(j) => {
                let v = j.evaluate(inputs)?;
                Ok([(j.output_port().name.clone(), v)].into())
            }
        }
    }

    fn output_of(&self, outputs: &[PortValues<T>], ep: &Endpoint) -> T {
        let i = self.node_index(&ep.node).expect("validated at connect");
        outputs[i][&ep.port]
    }

    /// Advances every node by one step of `dt`.
    ///
    /// Inputs are read from the latches (values emitted on the previous step)
    /// or from `exogenous`, so the node stepping order does not affect the
    /// result. Fresh outputs are then pushed into the latches, and lines
    /// leaving a node that just entered a flushing mode are set to the
    /// sentinel.
    pub fn step(
        &self,
        state: &mut NetworkState<T>,
        exogenous: &Exogenous<T>,
        dt: T,
        noise: &mut dyn NoiseSource<T>,
    ) -> Result<Snapshot<T>, CompositionError> {
        if !(dt > T::zero() && dt.is_finite()) {
            return Err(CompositionError::Node {
                node: String::new(),
                source: crate::hybrid::StepError::InvalidTimeStep(dt.as_f64()),
            });
        }
        let mut snaps: Vec<Option<NodeSnapshot<T>>> = vec![None; self.nodes.len()];
        let mut next_states = state.states.clone();
        for &i in &self.step_order {
            let node = &self.nodes[i];
            let inputs = self.gather_inputs(i, |c| state.lines[c].peek(), exogenous)?;
            let snap = match node {
                Node::Automaton(a) => {
                    let s = state.states[i].as_ref().expect("automaton node has a state");
                    let out = a.step(s, &inputs, dt, noise).map_err(|e| self.node_error(i, e))?;
                    if let Some(var) = out.state.x.iter().position(|v| !v.is_finite()) {
                        return Err(CompositionError::NonFiniteState {
                            node: node.name().to_owned(),
                            var: a.continuous_vars()[var].name.clone(),
                            step: state.steps,
                        });
                    }
                    if state.zeno[i].observe(out.fired.is_some()) {
                        return Err(CompositionError::Zeno {
                            node: node.name().to_owned(),
                            step: state.steps,
                            limit: self.max_consecutive_jumps,
                        });
                    }
                    next_states[i] = Some(out.state);
                    NodeSnapshot {
                        mode: Some(s.mode),
                        x: s.x.clone(),
                        inputs,
                        outputs: out.outputs,
                        fired: out.fired,
                        invariant_violated: out.invariant_violated,
                    }
                }
                Node::Junction(_) => {
                    let outputs = self.evaluate_node(i, node, None, &inputs, noise)?;
                    NodeSnapshot { mode: None, x: Vec::new(), inputs, outputs, fired: None, invariant_violated: false }
                }
            };
            snaps[i] = Some(snap);
        }
        let nodes: Vec<NodeSnapshot<T>> = snaps.into_iter().map(|s| s.expect("every node stepped")).collect();

        for (c, conn) in self.connections.iter().enumerate() {
            let i = self.node_index(&conn.source.node).expect("validated at connect");
            state.lines[c].push_pop(nodes[i].outputs[&conn.source.port]);
        }
        for (i, snap) in nodes.iter().enumerate() {
            let Some(fired) = &snap.fired else { continue };
            let Node::Automaton(a) = &self.nodes[i] else { continue };
            if !a.modes()[fired.to.0].flush_on_entry {
                continue;
            }
            for (c, conn) in self.connections.iter().enumerate() {
                if conn.source.node != a.name() {
                    continue;
                }
                let sentinel =
                    a.output_ports().iter().any(|p| p.name == conn.source.port && p.kind == PortKind::Sentinel);
                if sentinel {
                    state.lines[c].flush(T::SENTINEL);
                }
            }
        }

        let snapshot = Snapshot { step: state.steps, t: state.clock, nodes };
        state.states = next_states;
        state.steps += 1;
        state.clock = T::from_u64(state.steps).expect("step count fits the scalar") * dt;
        Ok(snapshot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hybrid::{constant, input, AutomatonBuilder, ModeDefinition, SeededNoise, Transition};

    fn relay(name: &str) -> OpenHybridAutomaton<f64> {
        AutomatonBuilder::new(name)
            .input("u", PortKind::Continuous)
            .output("y", PortKind::Sentinel)
            .mode(ModeDefinition::new("Up").output("y", input("u")))
            .mode(ModeDefinition::new("Down").output("y", constant(-1.0)).flush_on_entry())
            .transition(Transition::new("drop", "Up", "Down", 0, input("u").lt(constant(0.0))))
            .build()
            .unwrap()
    }

    fn exo(pairs: &[(&str, &str, f64)]) -> Exogenous<f64> {
        let mut m = Exogenous::new();
        for (n, p, v) in pairs {
            m.entry(n.to_string()).or_default().insert(p.to_string(), *v);
        }
        m
    }

    #[test]
    fn add_node_and_duplicates() {
        let mut net = CompositionNetwork::new();
        net.add_node(relay("a")).unwrap();
        assert_eq!(net.free_inputs().len(), 1);
        assert!(matches!(net.add_node(relay("a")), Err(CompositionError::DuplicateNode(_))));
        net.add_node(JunctionBlock::sum("s", &["x", "y"], "z").unwrap()).unwrap();
        assert_eq!(net.free_ports().iter().filter(|p| p.direction == Direction::Output).count(), 2);
    }

    #[test]
    fn empty_net_has_no_free_ports() {
        assert!(CompositionNetwork::<f64>::new().free_ports().is_empty());
    }

    #[test]
    fn connect_errors() {
        let mut net = CompositionNetwork::new();
        net.add_node(relay("a")).unwrap();
        net.add_node(relay("b")).unwrap();
        net.connect(("a", "y"), ("b", "u"), DependencyType::Cyber).unwrap();
        assert!(matches!(
            net.connect(("a", "y"), ("b", "u"), DependencyType::Cyber),
            Err(CompositionError::AlreadyConnected { .. })
        ));
        assert!(matches!(
            net.connect(("a", "u"), ("a", "u"), DependencyType::Cyber),
            Err(CompositionError::DirectionMismatch { .. })
        ));
        assert!(matches!(
            net.connect(("a", "nope"), ("a", "u"), DependencyType::Cyber),
            Err(CompositionError::UnknownPort { .. })
        ));
        assert!(matches!(
            net.connect(("zz", "y"), ("a", "u"), DependencyType::Cyber),
            Err(CompositionError::UnknownNode(_))
        ));
    }

    #[test]
    fn impulse_arrives_one_step_later() {
        let mut net = CompositionNetwork::new();
        net.add_node(relay("a")).unwrap();
        net.add_node(relay("b")).unwrap();
        net.connect(("a", "y"), ("b", "u"), DependencyType::Cyber).unwrap();
        let mut st = net.initial_state(&exo(&[("a", "u", 0.0)])).unwrap();
        let mut seen = Vec::new();
        for k in 0..4 {
            let u = if k == 1 { 5.0 } else { 0.0 };
            let snap = net.step(&mut st, &exo(&[("a", "u", u)]), 0.1, &mut Silent).unwrap();
            seen.push(snap.nodes[1].inputs["u"]);
        }
        assert_eq!(seen, [0.0, 0.0, 5.0, 0.0]);
    }

    #[test]
    fn extra_delay_adds_steps() {
        let mut net = CompositionNetwork::new();
        net.add_node(relay("a")).unwrap();
        net.add_node(relay("b")).unwrap();
        net.connect_delayed(("a", "y"), ("b", "u"), DependencyType::Cyber, 2).unwrap();
        let mut st = net.initial_state(&exo(&[("a", "u", 0.0)])).unwrap();
        let mut seen = Vec::new();
        for k in 0..6 {
            let u = if k == 0 { 3.0 } else { 0.0 };
            seen.push(net.step(&mut st, &exo(&[("a", "u", u)]), 0.1, &mut Silent).unwrap().nodes[1].inputs["u"]);
        }
        assert_eq!(seen, [0.0, 0.0, 0.0, 3.0, 0.0, 0.0]);
    }

    #[test]
    fn flushing_mode_sets_lines_to_sentinel() {
        let mut net = CompositionNetwork::new();
        net.add_node(relay("a")).unwrap();
        net.add_node(relay("b")).unwrap();
        net.connect_delayed(("a", "y"), ("b", "u"), DependencyType::Cyber, 3).unwrap();
        let mut st = net.initial_state(&exo(&[("a", "u", 2.0)])).unwrap();
        assert!(st.line(0).contents().all(|v| v == 2.0));
        // a drops on step 0; the very next read at b is the sentinel
        net.step(&mut st, &exo(&[("a", "u", -5.0)]), 0.1, &mut Silent).unwrap();
        assert!(st.line(0).contents().all(|v| v == -1.0));
        let snap = net.step(&mut st, &exo(&[("a", "u", -5.0)]), 0.1, &mut Silent).unwrap();
        assert_eq!(snap.nodes[1].inputs["u"], -1.0);
    }

    #[test]
    fn missing_exogenous_reported() {
        let mut net = CompositionNetwork::new();
        net.add_node(relay("a")).unwrap();
        assert!(matches!(net.initial_state(&Exogenous::new()), Err(CompositionError::MissingExogenous { .. })));
    }

    #[test]
    fn clock_is_step_count_times_dt() {
        let mut net = CompositionNetwork::new();
        net.add_node(relay("a")).unwrap();
        let e = exo(&[("a", "u", 1.0)]);
        let mut st = net.initial_state(&e).unwrap();
        let mut noise = SeededNoise::new(0);
        for _ in 0..1000 {
            net.step(&mut st, &e, 0.1, &mut noise).unwrap();
        }
        assert_eq!(st.time(), 1000.0 * 0.1);
        assert_eq!(st.steps(), 1000);
    }

    #[test]
    fn zeno_abort_names_node() {
        let flip: OpenHybridAutomaton<f64> = AutomatonBuilder::new("flip")
            .mode(ModeDefinition::new("A"))
            .mode(ModeDefinition::new("B"))
            .transition(Transition::new("ab", "A", "B", 0, crate::hybrid::Pred::True))
            .transition(Transition::new("ba", "B", "A", 0, crate::hybrid::Pred::True))
            .build()
            .unwrap();
        let mut net = CompositionNetwork::new();
        net.add_node(flip).unwrap();
        net.set_max_consecutive_jumps(5);
        let mut st = net.initial_state(&Exogenous::new()).unwrap();
        let mut err = None;
        for _ in 0..10 {
            if let Err(e) = net.step(&mut st, &Exogenous::new(), 0.1, &mut Silent) {
                err = Some(e);
                break;
            }
        }
        assert!(matches!(err, Some(CompositionError::Zeno { ref node, step: 5, limit: 5 }) if node == "flip"));
    }
}
