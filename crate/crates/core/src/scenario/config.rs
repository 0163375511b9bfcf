//! Scenario files: model parameters, solver settings, exogenous inputs and
//! optional initial-state overrides.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::composition::DEFAULT_MAX_CONSECUTIVE_JUMPS;
use crate::models::{
    make_micropolis, names, MicropolisParams, NetworkParams, ParamError, PumpParams, ScadaParams, SubstationParams,
    TankParams,
};
use crate::scenario::profile::{Profile, Schedule};
use crate::scenario::ScenarioError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Solver {
    /// Step size (min).
    pub dt: f64,
    /// Final time (min), inclusive.
    pub t_end: f64,
    pub seed: u64,
    pub max_consecutive_jumps: u32,
}

impl Default for Solver {
    fn default() -> Self {
        Self { dt: 0.1, t_end: 120.0, seed: 0, max_consecutive_jumps: DEFAULT_MAX_CONSECUTIVE_JUMPS }
    }
}

impl Solver {
    /// Number of steps after t = 0; the trace has one more row.
    pub fn steps(&self) -> u64 {
        (self.t_end / self.dt + 1e-9).floor() as u64
    }

    /// Clock of row `k`.
    pub fn time_of(&self, k: u64) -> f64 {
        k as f64 * self.dt
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Profiles {
    /// City power demand (kW).
    pub d_city: Profile,
    /// City water demand (m^3/min).
    pub w_d: Profile,
}

impl Default for Profiles {
    fn default() -> Self {
        Self { d_city: Profile::constant(200.0), w_d: Profile::constant(1.0) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Schedules {
    pub phi_n: Schedule,
    pub phi_p: Schedule,
    pub s_op: Schedule,
}

/// Starting mode and/or continuous values for one component.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct InitialOverride {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub state: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Scenario {
    pub substation: SubstationParams,
    pub scada: ScadaParams,
    pub network: NetworkParams,
    pub tank: TankParams,
    pub pump: PumpParams,
    pub solver: Solver,
    pub profiles: Profiles,
    pub schedules: Schedules,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub initial: BTreeMap<String, InitialOverride>,
}

/// Parses and validates a JSON scenario. Missing keys take their defaults;
/// unknown keys are rejected.
pub fn load_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let scenario: Scenario = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        ScenarioError::Parse { path, line: inner.line(), column: inner.column(), message: inner.to_string() }
    })?;
    scenario.validate()?;
    Ok(scenario)
}

impl Scenario {
    pub fn params(&self) -> MicropolisParams {
        MicropolisParams {
            substation: self.substation.clone(),
            scada: self.scada.clone(),
            network: self.network.clone(),
            tank: self.tank.clone(),
            pump: self.pump.clone(),
        }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let s = &self.solver;
        if !(s.dt.is_finite() && s.dt > 0.0) {
            return Err(ParamError::new("solver.dt", "must be > 0"));
        }
        if !(s.t_end.is_finite() && s.t_end >= s.dt) {
            return Err(ParamError::new("solver.t_end", "must be >= solver.dt"));
        }
        if s.max_consecutive_jumps == 0 {
            return Err(ParamError::new("solver.max_consecutive_jumps", "must be >= 1"));
        }
        self.params().validate()?;
        self.profiles.d_city.validate("profiles.d_city")?;
        self.profiles.w_d.validate("profiles.w_d")?;
        if self.profiles.w_d.points.iter().any(|p| p.1 < 0.0) {
            return Err(ParamError::new("profiles.w_d", "water demand must be >= 0"));
        }
        self.schedules.phi_n.validate("schedules.phi_n")?;
        self.schedules.phi_p.validate("schedules.phi_p")?;
        self.schedules.s_op.validate("schedules.s_op")?;
        self.validate_initial()
    }

    fn validate_initial(&self) -> Result<(), ParamError> {
        if self.initial.is_empty() {
            return Ok(());
        }
        let net = make_micropolis::<f64>(&self.params(), self.solver.dt)
            .map_err(|e| ParamError::new("initial", e.to_string()))?;
        for (node, o) in &self.initial {
            let field = format!("initial.{node}");
            let a = net.node(node).and_then(|n| n.as_automaton()).ok_or_else(|| {
                ParamError::new(&field, format!("unknown component; expected one of {:?}", names::COMPONENTS))
            })?;
            if let Some(m) = &o.mode {
                if a.mode_id(m).is_none() {
                    let known: Vec<&str> = a.modes().iter().map(|m| m.name.as_str()).collect();
                    return Err(ParamError::new(
                        format!("{field}.mode"),
                        format!("unknown mode `{m}`; expected one of {known:?}"),
                    ));
                }
            }
            for (var, v) in &o.state {
                if a.var_index(var).is_none() {
                    return Err(ParamError::new(format!("{field}.state.{var}"), "unknown state variable"));
                }
                if !v.is_finite() {
                    return Err(ParamError::new(format!("{field}.state.{var}"), "must be finite"));
                }
            }
            if node == names::TANK {
                if let Some(&v) = o.state.get("x_v") {
                    if !(0.0..=self.tank.max_volume).contains(&v) {
                        return Err(ParamError::new(format!("{field}.state.x_v"), "must lie in [0, tank.V_max]"));
                    }
                }
            }
        }
        Ok(())
    }

    /// SHA-256 of the fully resolved scenario, so files differing only in
    /// spelled-out defaults hash equal.
    pub fn hash(&self) -> String {
        let canonical = serde_json::to_vec(self).expect("scenario serializes");
        hex::encode(Sha256::digest(&canonical))
    }
}
