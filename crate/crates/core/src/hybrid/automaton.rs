//! Open hybrid automata and their fixed-step execution semantics.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::hybrid::expr::{Expr, Pred, Scope, SymbolKind, UnresolvedSymbol};
use crate::hybrid::noise::{NoiseSource, Silent};
use crate::scalar::Scalar;

/// Port values keyed by port name.
pub type PortValues<T> = BTreeMap<String, T>;

/// Walks every symbol an expression refers to.
type SymbolVisitor<'a> = dyn Fn(&mut dyn FnMut(SymbolKind, &str)) + 'a;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Input,
    Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PortKind {
    /// Real-valued physical quantity.
    Continuous,
    /// Small-integer command or flag.
    Discrete,
    /// Real-valued measurement where `-1` encodes "connection lost".
    Sentinel,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Port {
    pub name: String,
    pub direction: Direction,
    pub kind: PortKind,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ContinuousVar {
    pub name: String,
    pub unit: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeId(pub usize);

#[derive(Clone, Debug, PartialEq)]
pub struct ModeDefinition<T> {
    pub name: String,
    flow: Vec<(String, Expr<T>)>,
    outputs: Vec<(String, Expr<T>)>,
    pub invariant: Pred<T>,
    /// Entering this mode severs the automaton's outgoing sentinel-capable
    /// links; the composition flushes their delay lines to the sentinel.
    pub flush_on_entry: bool,
}

impl<T: Scalar> ModeDefinition<T> {
    pub fn new(name: &str) -> Self {
        Self {
            name: name.to_owned(),
            flow: Vec::new(),
            outputs: Vec::new(),
            invariant: Pred::True,
            flush_on_entry: false,
        }
    }

    pub fn flow(mut self, var: &str, derivative: Expr<T>) -> Self {
        self.flow.push((var.to_owned(), derivative));
        self
    }

    pub fn output(mut self, port: &str, value: Expr<T>) -> Self {
        self.outputs.push((port.to_owned(), value));
        self
    }

    pub fn invariant(mut self, pred: Pred<T>) -> Self {
        self.invariant = pred;
        self
    }

    pub fn flush_on_entry(mut self) -> Self {
        self.flush_on_entry = true;
        self
    }

    /// Derivative expressions, in continuous-variable order once built.
    pub fn flows(&self) -> &[(String, Expr<T>)] {
        &self.flow
    }

    /// Output expressions, in output-port order once built.
    pub fn outputs(&self) -> &[(String, Expr<T>)] {
        &self.outputs
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Transition<T> {
    /// Human-readable identifier of the guard, shared by transitions that
    /// implement the same logical rule from different source modes.
    pub label: String,
    pub source: String,
    pub target: String,
    pub guard: Pred<T>,
    pub reset: Vec<(String, Expr<T>)>,
    /// Lower value wins when several guards hold.
    pub priority: i32,
}

impl<T: Scalar> Transition<T> {
    pub fn new(label: &str, source: &str, target: &str, priority: i32, guard: Pred<T>) -> Self {
        Self {
            label: label.to_owned(),
            source: source.to_owned(),
            target: target.to_owned(),
            guard,
            reset: Vec::new(),
            priority,
        }
    }

    pub fn reset(mut self, var: &str, value: Expr<T>) -> Self {
        self.reset.push((var.to_owned(), value));
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AutomatonState<T> {
    pub mode: ModeId,
    pub x: Vec<T>,
}

/// Record of the discrete jump taken during a step.
#[derive(Clone, Debug, PartialEq)]
pub struct FiredTransition {
    pub index: usize,
    pub label: String,
    pub from: ModeId,
    pub to: ModeId,
    /// Full guard text.
    pub guard: String,
    /// First satisfied disjunct of the guard.
    pub trigger: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StepOutcome<T> {
    pub state: AutomatonState<T>,
    pub outputs: PortValues<T>,
    pub fired: Option<FiredTransition>,
    pub invariant_violated: bool,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DefinitionError {
    #[error("automaton `{automaton}`: duplicate {what} `{name}`")]
    Duplicate { automaton: String, what: &'static str, name: String },
    #[error("automaton `{automaton}`: unknown mode `{mode}`")]
    UnknownMode { automaton: String, mode: String },
    #[error("automaton `{automaton}`: {context} references unknown {kind} `{name}`")]
    UnknownSymbol { automaton: String, context: String, kind: SymbolKind, name: String },
    #[error("automaton `{automaton}`: mode `{mode}` has no flow for `{var}`")]
    MissingFlow { automaton: String, mode: String, var: String },
    #[error("automaton `{automaton}`: mode `{mode}` does not assign output `{port}`")]
    MissingOutput { automaton: String, mode: String, port: String },
    #[error("automaton `{automaton}`: transitions from `{source_mode}` share priority {priority}")]
    DuplicatePriority { automaton: String, source_mode: String, priority: i32 },
    #[error("automaton `{automaton}`: {context} may not draw noise")]
    NoiseNotAllowed { automaton: String, context: String },
    #[error("automaton `{automaton}` has no modes")]
    NoModes { automaton: String },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StepError {
    #[error(transparent)]
    Definition(#[from] DefinitionError),
    #[error("automaton `{automaton}`: missing value for input port `{port}`")]
    MissingInput { automaton: String, port: String },
    #[error("automaton `{automaton}`: mode id {id} out of range")]
    UnknownModeId { automaton: String, id: usize },
    #[error("automaton `{automaton}`: state vector has {got} entries, expected {expected}")]
    StateLength { automaton: String, expected: usize, got: usize },
    #[error("time step must be positive and finite, got {0}")]
    InvalidTimeStep(f64),
    #[error("automaton `{automaton}`: non-finite derivative of `{var}` in mode `{mode}`")]
    NonFinite { automaton: String, mode: String, var: String },
}

/// Immutable, validated open hybrid automaton.
#[derive(Clone, Debug)]
pub struct OpenHybridAutomaton<T> {
    name: String,
    vars: Vec<ContinuousVar>,
    inputs: Vec<Port>,
    outputs: Vec<Port>,
    modes: Vec<ModeDefinition<T>>,
    transitions: Vec<Transition<T>>,
    guard_text: Vec<String>,
    endpoints: Vec<(ModeId, ModeId)>,
    /// Transition indices per source mode, sorted by priority.
    by_source: Vec<Vec<usize>>,
    initial_mode: ModeId,
    initial_state: Vec<T>,
    parameters: BTreeMap<String, T>,
}

pub struct AutomatonBuilder<T> {
    name: String,
    vars: Vec<ContinuousVar>,
    initial_state: Vec<T>,
    inputs: Vec<Port>,
    outputs: Vec<Port>,
    modes: Vec<ModeDefinition<T>>,
    transitions: Vec<Transition<T>>,
    initial_mode: Option<String>,
    parameters: Vec<(String, T)>,
}

impl<T: Scalar> AutomatonBuilder<T> {
    pub fn new(name: &str) -> Self {
        Self {
            name: name.to_owned(),
            vars: Vec::new(),
            initial_state: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            modes: Vec::new(),
            transitions: Vec::new(),
            initial_mode: None,
            parameters: Vec::new(),
        }
    }

    pub fn continuous(mut self, name: &str, unit: &str, initial: T) -> Self {
        self.vars.push(ContinuousVar { name: name.to_owned(), unit: unit.to_owned() });
        self.initial_state.push(initial);
        self
    }

    pub fn input(mut self, name: &str, kind: PortKind) -> Self {
        self.inputs.push(Port { name: name.to_owned(), direction: Direction::Input, kind });
        self
    }

    pub fn output(mut self, name: &str, kind: PortKind) -> Self {
        self.outputs.push(Port { name: name.to_owned(), direction: Direction::Output, kind });
        self
    }

    pub fn param(mut self, name: &str, value: T) -> Self {
        self.parameters.push((name.to_owned(), value));
        self
    }

    pub fn mode(mut self, mode: ModeDefinition<T>) -> Self {
        self.modes.push(mode);
        self
    }

    pub fn transition(mut self, transition: Transition<T>) -> Self {
        self.transitions.push(transition);
        self
    }

    /// Defaults to the first declared mode.
    pub fn initial_mode(mut self, mode: &str) -> Self {
        self.initial_mode = Some(mode.to_owned());
        self
    }

    pub fn build(self) -> Result<OpenHybridAutomaton<T>, DefinitionError> {
        let name = self.name;
        let dup = |what: &'static str, n: &str| DefinitionError::Duplicate {
            automaton: name.clone(),
            what,
            name: n.to_owned(),
        };
        check_unique(self.vars.iter().map(|v| v.name.as_str())).map_err(|n| dup("continuous variable", n))?;
        check_unique(self.inputs.iter().map(|p| p.name.as_str())).map_err(|n| dup("input port", n))?;
        check_unique(self.outputs.iter().map(|p| p.name.as_str())).map_err(|n| dup("output port", n))?;
        check_unique(self.modes.iter().map(|m| m.name.as_str())).map_err(|n| dup("mode", n))?;
        check_unique(self.parameters.iter().map(|(n, _)| n.as_str())).map_err(|n| dup("parameter", n))?;

        if self.modes.is_empty() {
            return Err(DefinitionError::NoModes { automaton: name });
        }
        let mode_id = |m: &str| {
            self.modes
                .iter()
                .position(|d| d.name == m)
                .map(ModeId)
                .ok_or_else(|| DefinitionError::UnknownMode { automaton: name.clone(), mode: m.to_owned() })
        };
        let initial_mode = match &self.initial_mode {
            Some(m) => mode_id(m)?,
            None => ModeId(0),
        };

        let declared = |kind: SymbolKind, sym: &str| match kind {
            SymbolKind::State => self.vars.iter().any(|v| v.name == sym),
            SymbolKind::Input => self.inputs.iter().any(|p| p.name == sym),
            SymbolKind::Param => self.parameters.iter().any(|(n, _)| n == sym),
        };
        let check_symbols = |context: String, visit: &SymbolVisitor<'_>| {
            let mut bad = None;
            visit(&mut |kind, sym| {
                if bad.is_none() && !declared(kind, sym) {
                    bad = Some((kind, sym.to_owned()));
                }
            });
            match bad {
                Some((kind, sym)) => {
                    Err(DefinitionError::UnknownSymbol { automaton: name.clone(), context, kind, name: sym })
                }
                None => Ok(()),
            }
        };
        let no_noise = |context: String, noisy: bool| {
            if noisy {
                Err(DefinitionError::NoiseNotAllowed { automaton: name.clone(), context })
            } else {
                Ok(())
            }
        };

        let mut modes = Vec::with_capacity(self.modes.len());
        for mode in &self.modes {
            let mut flow = Vec::with_capacity(self.vars.len());
            for var in &self.vars {
                let mut matching = mode.flow.iter().filter(|(v, _)| *v == var.name);
                let (_, e) = matching.next().ok_or_else(|| DefinitionError::MissingFlow {
                    automaton: name.clone(),
                    mode: mode.name.clone(),
                    var: var.name.clone(),
                })?;
                if matching.next().is_some() {
                    return Err(dup("flow", &format!("{}.{}", mode.name, var.name)));
                }
                flow.push((var.name.clone(), e.clone()));
            }
            if let Some((v, _)) = mode.flow.iter().find(|(v, _)| !declared(SymbolKind::State, v)) {
                return Err(DefinitionError::UnknownSymbol {
                    automaton: name.clone(),
                    context: format!("flow of mode `{}`", mode.name),
                    kind: SymbolKind::State,
                    name: v.clone(),
                });
            }
            let mut outputs = Vec::with_capacity(self.outputs.len());
            for port in &self.outputs {
                let mut matching = mode.outputs.iter().filter(|(p, _)| *p == port.name);
                let (_, e) = matching.next().ok_or_else(|| DefinitionError::MissingOutput {
                    automaton: name.clone(),
                    mode: mode.name.clone(),
                    port: port.name.clone(),
                })?;
                if matching.next().is_some() {
                    return Err(dup("output assignment", &format!("{}.{}", mode.name, port.name)));
                }
                outputs.push((port.name.clone(), e.clone()));
            }
            if let Some((p, _)) = mode.outputs.iter().find(|(p, _)| !self.outputs.iter().any(|o| o.name == *p)) {
                return Err(DefinitionError::UnknownSymbol {
                    automaton: name.clone(),
                    context: format!("output map of mode `{}`", mode.name),
                    kind: SymbolKind::Input,
                    name: p.clone(),
                });
            }
            for (var, e) in &flow {
                let ctx = format!("flow `{var}` of mode `{}`", mode.name);
                check_symbols(ctx.clone(), &|f| e.visit_symbols(f))?;
                no_noise(ctx, e.contains_noise())?;
            }
            for (port, e) in &outputs {
                check_symbols(format!("output `{port}` of mode `{}`", mode.name), &|f| e.visit_symbols(f))?;
            }
            let ctx = format!("invariant of mode `{}`", mode.name);
            check_symbols(ctx.clone(), &|f| mode.invariant.visit_symbols(f))?;
            no_noise(ctx, mode.invariant.contains_noise())?;
            modes.push(ModeDefinition {
                name: mode.name.clone(),
                flow,
                outputs,
                invariant: mode.invariant.clone(),
                flush_on_entry: mode.flush_on_entry,
            });
        }

        let mut endpoints = Vec::with_capacity(self.transitions.len());
        let mut by_source = vec![Vec::new(); modes.len()];
        let mut guard_text = Vec::with_capacity(self.transitions.len());
        for (i, t) in self.transitions.iter().enumerate() {
            let src = mode_id(&t.source)?;
            let dst = mode_id(&t.target)?;
            let ctx = format!("guard `{}` ({} -> {})", t.label, t.source, t.target);
            check_symbols(ctx.clone(), &|f| t.guard.visit_symbols(f))?;
            no_noise(ctx, t.guard.contains_noise())?;
            for (var, e) in &t.reset {
                let ctx = format!("reset of `{var}` in `{}`", t.label);
                if !declared(SymbolKind::State, var) {
                    return Err(DefinitionError::UnknownSymbol {
                        automaton: name.clone(),
                        context: ctx,
                        kind: SymbolKind::State,
                        name: var.clone(),
                    });
                }
                check_symbols(ctx.clone(), &|f| e.visit_symbols(f))?;
                no_noise(ctx, e.contains_noise())?;
            }
            endpoints.push((src, dst));
            by_source[src.0].push(i);
            guard_text.push(t.guard.to_string());
        }
        for (src, list) in by_source.iter_mut().enumerate() {
            list.sort_by_key(|&i| self.transitions[i].priority);
            for w in list.windows(2) {
                let p = self.transitions[w[0]].priority;
                if p == self.transitions[w[1]].priority {
                    return Err(DefinitionError::DuplicatePriority {
                        automaton: name.clone(),
                        source_mode: modes[src].name.clone(),
                        priority: p,
                    });
                }
            }
        }

        Ok(OpenHybridAutomaton {
            name,
            vars: self.vars,
            inputs: self.inputs,
            outputs: self.outputs,
            modes,
            transitions: self.transitions,
            guard_text,
            endpoints,
            by_source,
            initial_mode,
            initial_state: self.initial_state,
            parameters: self.parameters.into_iter().collect(),
        })
    }
}

fn check_unique<'a>(names: impl Iterator<Item = &'a str>) -> Result<(), &'a str> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(n);
        }
    }
    Ok(())
}

struct AutomatonScope<'a, T> {
    automaton: &'a OpenHybridAutomaton<T>,
    x: &'a [T],
    inputs: &'a PortValues<T>,
}

impl<T: Scalar> Scope<T> for AutomatonScope<'_, T> {
    fn lookup(&self, kind: SymbolKind, name: &str) -> Option<T> {
        match kind {
            SymbolKind::State => self.automaton.var_index(name).map(|i| self.x[i]),
            SymbolKind::Input => self.inputs.get(name).copied(),
            SymbolKind::Param => self.automaton.parameters.get(name).copied(),
        }
    }
}

impl<T: Scalar> OpenHybridAutomaton<T> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn continuous_vars(&self) -> &[ContinuousVar] {
        &self.vars
    }

    pub fn input_ports(&self) -> &[Port] {
        &self.inputs
    }

    pub fn output_ports(&self) -> &[Port] {
        &self.outputs
    }

    pub fn modes(&self) -> &[ModeDefinition<T>] {
        &self.modes
    }

    pub fn transitions(&self) -> &[Transition<T>] {
        &self.transitions
    }

    pub fn parameters(&self) -> &BTreeMap<String, T> {
        &self.parameters
    }

    pub fn parameter(&self, name: &str) -> Option<T> {
        self.parameters.get(name).copied()
    }

    pub fn initial_state(&self) -> AutomatonState<T> {
        AutomatonState { mode: self.initial_mode, x: self.initial_state.clone() }
    }

    pub fn mode_id(&self, name: &str) -> Option<ModeId> {
        self.modes.iter().position(|m| m.name == name).map(ModeId)
    }

    pub fn mode_name(&self, id: ModeId) -> &str {
        &self.modes[id.0].name
    }

    pub fn mode(&self, id: ModeId) -> Option<&ModeDefinition<T>> {
        self.modes.get(id.0)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    /// Unique guard labels, in declaration order.
    pub fn guard_labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for t in &self.transitions {
            if !out.contains(&t.label.as_str()) {
                out.push(&t.label);
            }
        }
        out
    }

    /// Builds a state from a mode name and the initial continuous vector.
    pub fn state_in(&self, mode: &str, x: Vec<T>) -> Result<AutomatonState<T>, StepError> {
        let id = self
            .mode_id(mode)
            .ok_or_else(|| DefinitionError::UnknownMode { automaton: self.name.clone(), mode: mode.to_owned() })?;
        let state = AutomatonState { mode: id, x };
        self.check_state(&state)?;
        Ok(state)
    }

    fn check_state(&self, state: &AutomatonState<T>) -> Result<&ModeDefinition<T>, StepError> {
        let mode = self
            .modes
            .get(state.mode.0)
            .ok_or_else(|| StepError::UnknownModeId { automaton: self.name.clone(), id: state.mode.0 })?;
        if state.x.len() != self.vars.len() {
            return Err(StepError::StateLength {
                automaton: self.name.clone(),
                expected: self.vars.len(),
                got: state.x.len(),
            });
        }
        Ok(mode)
    }

    fn check_inputs(&self, inputs: &PortValues<T>) -> Result<(), StepError> {
        match self.inputs.iter().find(|p| !inputs.contains_key(&p.name)) {
            Some(p) => Err(StepError::MissingInput { automaton: self.name.clone(), port: p.name.clone() }),
            None => Ok(()),
        }
    }

    fn unresolved(&self, context: &str, e: UnresolvedSymbol) -> StepError {
        DefinitionError::UnknownSymbol {
            automaton: self.name.clone(),
            context: context.to_owned(),
            kind: e.kind,
            name: e.name,
        }
        .into()
    }

    fn scope<'a>(&'a self, x: &'a [T], inputs: &'a PortValues<T>) -> AutomatonScope<'a, T> {
        AutomatonScope { automaton: self, x, inputs }
    }

    /// Output values of the current mode; pure given the noise draw.
    pub fn evaluate_outputs(
        &self,
        state: &AutomatonState<T>,
        inputs: &PortValues<T>,
        noise: &mut dyn NoiseSource<T>,
    ) -> Result<PortValues<T>, StepError> {
        let mode = self.check_state(state)?;
        self.check_inputs(inputs)?;
        let scope = self.scope(&state.x, inputs);
        let mut out = PortValues::new();
        for (port, e) in &mode.outputs {
            let v = e.eval(&scope, noise).map_err(|err| self.unresolved(port, err))?;
            out.insert(port.clone(), v);
        }
        Ok(out)
    }

    /// One explicit Euler step of the current mode's flow. Never changes mode.
    pub fn integrate_flow(
        &self,
        state: &AutomatonState<T>,
        inputs: &PortValues<T>,
        dt: T,
    ) -> Result<Vec<T>, StepError> {
        if !(dt > T::zero() && dt.is_finite()) {
            return Err(StepError::InvalidTimeStep(dt.as_f64()));
        }
        let mode = self.check_state(state)?;
        self.check_inputs(inputs)?;
        let scope = self.scope(&state.x, inputs);
        let mut next = state.x.clone();
        for (i, (var, e)) in mode.flow.iter().enumerate() {
            let d = e.eval(&scope, &mut Silent).map_err(|err| self.unresolved(var, err))?;
            if !d.is_finite() {
                return Err(StepError::NonFinite {
                    automaton: self.name.clone(),
                    mode: mode.name.clone(),
                    var: var.clone(),
                });
            }
            next[i] = state.x[i] + dt * d;
        }
        Ok(next)
    }

    /// Transitions out of the current mode whose guard holds, by ascending priority.
    pub fn enabled_transitions(
        &self,
        state: &AutomatonState<T>,
        inputs: &PortValues<T>,
    ) -> Result<Vec<&Transition<T>>, StepError> {
        Ok(self.enabled_indices(state, inputs)?.into_iter().map(|i| &self.transitions[i]).collect())
    }

    fn enabled_indices(&self, state: &AutomatonState<T>, inputs: &PortValues<T>) -> Result<Vec<usize>, StepError> {
        self.check_state(state)?;
        self.check_inputs(inputs)?;
        let scope = self.scope(&state.x, inputs);
        let mut out = Vec::new();
        for &i in &self.by_source[state.mode.0] {
            let t = &self.transitions[i];
            if t.guard.eval(&scope).map_err(|e| self.unresolved(&t.label, e))? {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Outputs from the pre-step mode, Euler flow, guards on the integrated
    /// state with the same inputs, then at most one jump (highest priority).
    pub fn step(
        &self,
        state: &AutomatonState<T>,
        inputs: &PortValues<T>,
        dt: T,
        noise: &mut dyn NoiseSource<T>,
    ) -> Result<StepOutcome<T>, StepError> {
        let outputs = self.evaluate_outputs(state, inputs, noise)?;
        let x = self.integrate_flow(state, inputs, dt)?;
        let mut next = AutomatonState { mode: state.mode, x };
        let enabled = self.enabled_indices(&next, inputs)?;
        let mut fired = None;
        if let Some(&i) = enabled.first() {
            let t = &self.transitions[i];
            let scope = self.scope(&next.x, inputs);
            let trigger = t.guard.trigger(&scope).map_err(|e| self.unresolved(&t.label, e))?;
            let mut reset = next.x.clone();
            for (var, e) in &t.reset {
                let idx = self.var_index(var).expect("reset variable validated at build");
                reset[idx] = e.eval(&scope, &mut Silent).map_err(|err| self.unresolved(var, err))?;
            }
            let (from, to) = self.endpoints[i];
            next = AutomatonState { mode: to, x: reset };
            fired = Some(FiredTransition {
                index: i,
                label: t.label.clone(),
                from,
                to,
                guard: self.guard_text[i].clone(),
                trigger,
            });
        }
        let mode = &self.modes[next.mode.0];
        let invariant_violated =
            !mode.invariant.eval(&self.scope(&next.x, inputs)).map_err(|e| self.unresolved("invariant", e))?;
        if invariant_violated {
            log::warn!("{}: invariant of mode `{}` violated at x = {:?}", self.name, mode.name, next.x);
        }
        Ok(StepOutcome { state: next, outputs, fired, invariant_violated })
    }
}

impl<T: Scalar> fmt::Display for OpenHybridAutomaton<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "automaton {}", self.name)?;
        for m in &self.modes {
            writeln!(f, "  mode {}", m.name)?;
        }
        for (t, g) in self.transitions.iter().zip(&self.guard_text) {
            writeln!(f, "  {} -> {} [{}] when {}", t.source, t.target, t.label, g)?;
        }
        Ok(())
    }
}

/// Counts successive steps on which an automaton jumped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZenoGuard {
    limit: u32,
    run: u32,
}

impl ZenoGuard {
    pub fn new(limit: u32) -> Self {
        Self { limit, run: 0 }
    }

    /// Returns `true` once the run of consecutive jumps exceeds the limit.
    pub fn observe(&mut self, jumped: bool) -> bool {
        if jumped {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run > self.limit
    }

    pub fn run_length(&self) -> u32 {
        self.run
    }
}
