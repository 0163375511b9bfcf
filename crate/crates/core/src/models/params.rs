//! Parameter sets for the infrastructure models.
//!
//! Values are plain `f64` (they come from scenario files); the model
//! constructors convert them to the automaton scalar type.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Invariant violation, named by its dotted field path (e.g. `tank.V_0`).
#[derive(Debug, Error, Clone, PartialEq)]
#[error("{field}: {message}")]
pub struct ParamError {
    pub field: String,
    pub message: String,
}

impl ParamError {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self { field: field.into(), message: message.into() }
    }
}

fn require(ok: bool, field: &str, message: &str) -> Result<(), ParamError> {
    if ok {
        Ok(())
    } else {
        Err(ParamError::new(field, message))
    }
}

fn finite(v: f64, field: &str) -> Result<(), ParamError> {
    require(v.is_finite(), field, "must be finite")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SubstationParams {
    /// Power limit (kW).
    #[serde(rename = "P_lim")]
    pub power_limit: f64,
    /// Minimum time in Switch Off before power can be restored (min).
    #[serde(rename = "T_s")]
    pub safety_period: f64,
    /// Standard deviation of the measurement noise (kW).
    #[serde(rename = "sigma")]
    pub noise_std: f64,
}

impl Default for SubstationParams {
    fn default() -> Self {
        Self { power_limit: 500.0, safety_period: 5.0, noise_std: 0.5 }
    }
}

impl SubstationParams {
    pub fn validate(&self) -> Result<(), ParamError> {
        finite(self.power_limit, "substation.P_lim")?;
        finite(self.safety_period, "substation.T_s")?;
        finite(self.noise_std, "substation.sigma")?;
        require(self.power_limit > 0.0, "substation.P_lim", "must be > 0")?;
        require(self.safety_period >= 0.0, "substation.T_s", "must be >= 0")?;
        require(self.noise_std >= 0.0, "substation.sigma", "must be >= 0")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScadaParams {
    /// Debounce before opening the breaker (min).
    #[serde(rename = "T_d")]
    pub transmission_delay: f64,
    /// Minimum time Open before closing again (min).
    #[serde(rename = "T_s")]
    pub safety_time: f64,
    /// Power measurement below which the substation is taken to be off (kW).
    /// Defaults to `max(2 sigma, 1)`.
    #[serde(rename = "theta_off", skip_serializing_if = "Option::is_none")]
    pub off_threshold: Option<f64>,
}

impl Default for ScadaParams {
    fn default() -> Self {
        Self { transmission_delay: 1.0, safety_time: 5.0, off_threshold: None }
    }
}

impl ScadaParams {
    pub fn validate(&self) -> Result<(), ParamError> {
        finite(self.transmission_delay, "scada.T_d")?;
        finite(self.safety_time, "scada.T_s")?;
        require(self.transmission_delay >= 0.0, "scada.T_d", "must be >= 0")?;
        require(self.safety_time >= 0.0, "scada.T_s", "must be >= 0")?;
        if let Some(t) = self.off_threshold {
            finite(t, "scada.theta_off")?;
            require(t > 0.0, "scada.theta_off", "must be > 0")?;
        }
        Ok(())
    }

    pub fn resolved_off_threshold(&self, noise_std: f64) -> f64 {
        self.off_threshold.unwrap_or_else(|| (2.0 * noise_std).max(1.0))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NetworkParams {
    /// Power the antennas need (kW).
    #[serde(rename = "P_n")]
    pub working_power: f64,
    /// UPS reserve (min).
    #[serde(rename = "T_ups")]
    pub ups_duration: f64,
    /// Transmission delay of the substation measurement (min).
    #[serde(rename = "T_1")]
    pub delay_measurement: f64,
    /// Transmission delay of the breaker command (min).
    #[serde(rename = "T_2")]
    pub delay_command: f64,
    /// Transmission delay of the tank level (min).
    #[serde(rename = "T_3")]
    pub delay_level: f64,
}

impl Default for NetworkParams {
    fn default() -> Self {
        Self { working_power: 10.0, ups_duration: 30.0, delay_measurement: 0.2, delay_command: 0.2, delay_level: 0.2 }
    }
}

impl NetworkParams {
    pub fn validate(&self) -> Result<(), ParamError> {
        for (v, f) in [
            (self.working_power, "network.P_n"),
            (self.ups_duration, "network.T_ups"),
            (self.delay_measurement, "network.T_1"),
            (self.delay_command, "network.T_2"),
            (self.delay_level, "network.T_3"),
        ] {
            finite(v, f)?;
            require(v >= 0.0, f, "must be >= 0")?;
        }
        require(self.working_power > 0.0, "network.P_n", "must be > 0")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TankParams {
    /// Initial volume (m^3).
    #[serde(rename = "V_0")]
    pub initial_volume: f64,
    /// Capacity (m^3).
    #[serde(rename = "V_max")]
    pub max_volume: f64,
}

impl Default for TankParams {
    fn default() -> Self {
        Self { initial_volume: 50.0, max_volume: 100.0 }
    }
}

impl TankParams {
    pub fn validate(&self) -> Result<(), ParamError> {
        finite(self.initial_volume, "tank.V_0")?;
        finite(self.max_volume, "tank.V_max")?;
        require(self.max_volume > 0.0, "tank.V_max", "must be > 0")?;
        require(self.initial_volume >= 0.0, "tank.V_0", "must be >= 0")?;
        require(
            self.initial_volume <= self.max_volume,
            "tank.V_0",
            &format!("must not exceed tank.V_max = {}", self.max_volume),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PumpParams {
    /// Start threshold on the tank level (m^3).
    #[serde(rename = "V_th")]
    pub start_threshold: f64,
    /// Minimum rest between runs (min).
    #[serde(rename = "T_off")]
    pub min_rest: f64,
    /// Maximum run length (min).
    #[serde(rename = "T_on")]
    pub max_run: f64,
    /// Supply rate while running (m^3/min).
    #[serde(rename = "W_avg")]
    pub supply_rate: f64,
    /// Power drawn while running (kW).
    #[serde(rename = "P_p")]
    pub working_power: f64,
    /// Tank capacity seen by the stop rule. Defaults to `tank.V_max`.
    #[serde(rename = "V_max", skip_serializing_if = "Option::is_none")]
    pub max_volume: Option<f64>,
}

impl Default for PumpParams {
    fn default() -> Self {
        Self {
            start_threshold: 30.0,
            min_rest: 15.0,
            max_run: 120.0,
            supply_rate: 2.0,
            working_power: 50.0,
            max_volume: None,
        }
    }
}

impl PumpParams {
    pub fn validate(&self, tank_max: f64) -> Result<(), ParamError> {
        for (v, f) in [
            (self.start_threshold, "pump.V_th"),
            (self.min_rest, "pump.T_off"),
            (self.max_run, "pump.T_on"),
            (self.supply_rate, "pump.W_avg"),
            (self.working_power, "pump.P_p"),
        ] {
            finite(v, f)?;
        }
        let v_max = self.resolved_max_volume(tank_max);
        finite(v_max, "pump.V_max")?;
        require(self.start_threshold > 0.0, "pump.V_th", "must be > 0")?;
        require(self.start_threshold < v_max, "pump.V_th", &format!("must be below V_max = {v_max}"))?;
        require(self.min_rest >= 0.0, "pump.T_off", "must be >= 0")?;
        require(self.max_run >= 0.0, "pump.T_on", "must be >= 0")?;
        require(self.supply_rate > 0.0, "pump.W_avg", "must be > 0")?;
        require(self.working_power > 0.0, "pump.P_p", "must be > 0")
    }

    pub fn resolved_max_volume(&self, tank_max: f64) -> f64 {
        self.max_volume.unwrap_or(tank_max)
    }
}

/// All five parameter sets of the closed-loop model.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MicropolisParams {
    pub substation: SubstationParams,
    pub scada: ScadaParams,
    pub network: NetworkParams,
    pub tank: TankParams,
    pub pump: PumpParams,
}

impl MicropolisParams {
    pub fn validate(&self) -> Result<(), ParamError> {
        self.substation.validate()?;
        self.scada.validate()?;
        self.network.validate()?;
        self.tank.validate()?;
        self.pump.validate(self.tank.max_volume)
    }
}
