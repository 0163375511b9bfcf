//! Time-varying exogenous inputs: demand profiles and on/off schedules.

use serde::{Deserialize, Serialize};

use crate::models::ParamError;

/// Tolerance for "breakpoint at or before t", so that a breakpoint at 60 is
/// active on the step whose clock reads 59.99999999999.
const TIME_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Interp {
    /// Piecewise constant.
    #[default]
    Hold,
    Linear,
}

/// Breakpoint profile for a continuous input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Profile {
    #[serde(default)]
    pub interp: Interp,
    pub points: Vec<(f64, f64)>,
}

impl Profile {
    pub fn constant(value: f64) -> Self {
        Self { interp: Interp::Hold, points: vec![(0.0, value)] }
    }

    pub fn hold(points: &[(f64, f64)]) -> Self {
        Self { interp: Interp::Hold, points: points.to_vec() }
    }

    pub fn linear(points: &[(f64, f64)]) -> Self {
        Self { interp: Interp::Linear, points: points.to_vec() }
    }

    pub fn validate(&self, field: &str) -> Result<(), ParamError> {
        let Some(&(t0, _)) = self.points.first() else {
            return Err(ParamError::new(field, "needs at least one point"));
        };
        if self.points.iter().any(|(t, v)| !t.is_finite() || !v.is_finite()) {
            return Err(ParamError::new(field, "points must be finite"));
        }
        if t0 > 0.0 {
            return Err(ParamError::new(field, "first point must be at t <= 0"));
        }
        if self.points.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(ParamError::new(field, "times must be strictly increasing"));
        }
        Ok(())
    }

    /// Value at `t`; beyond the last point the last value is held.
    pub fn sample(&self, t: f64) -> f64 {
        let after = self.points.partition_point(|&(ti, _)| ti <= t + TIME_EPS);
        if after == 0 {
            return self.points.first().map_or(0.0, |p| p.1);
        }
        let (ta, va) = self.points[after - 1];
        match (self.interp, self.points.get(after)) {
            (Interp::Linear, Some(&(tb, vb))) => va + (vb - va) * ((t - ta) / (tb - ta)).clamp(0.0, 1.0),
            _ => va,
        }
    }

    pub fn max_value(&self) -> f64 {
        self.points.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max)
    }
}

/// On/off toggles for a discrete input; 0 before the first toggle.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Schedule(pub Vec<(f64, f64)>);

impl Schedule {
    pub fn validate(&self, field: &str) -> Result<(), ParamError> {
        if self.0.iter().any(|&(t, v)| !t.is_finite() || (v != 0.0 && v != 1.0)) {
            return Err(ParamError::new(field, "entries must be [t, 0|1] with finite t"));
        }
        if self.0.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(ParamError::new(field, "times must be strictly increasing"));
        }
        Ok(())
    }

    pub fn sample(&self, t: f64) -> f64 {
        let after = self.0.partition_point(|&(ti, _)| ti <= t + TIME_EPS);
        if after == 0 {
            0.0
        } else {
            self.0[after - 1].1
        }
    }
}
