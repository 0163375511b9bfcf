//! Water tank fed by the pump and drained by city demand.

use crate::hybrid::{input, param, state, AutomatonBuilder, ModeDefinition, OpenHybridAutomaton, PortKind, Transition};
use crate::models::params::{ParamError, TankParams};
use crate::models::{lit, names};
use crate::scalar::Scalar;

pub const HEALTHY: &str = "Healthy";
pub const DRAINED: &str = "Drained";
pub const OVERFLOW: &str = "Overflow";

/// Modes `Healthy`, `Drained` and `Overflow`; `Healthy` is initial unless
/// `V_0 = 0`.
///
/// `x_v` follows `w_s - w_d` while healthy. The empty and full modes clamp the
/// volume on entry and only let it move back into range, so `x_v` stays in
/// `[0, V_max]`. Output `v_tank` reports `x_v`, 0 or `V_max`.
pub fn make_tank<T: Scalar>(p: &TankParams) -> Result<OpenHybridAutomaton<T>, ParamError> {
    p.validate()?;
    let net = || input("w_s") - input("w_d");
    let automaton = AutomatonBuilder::new(names::TANK)
        .continuous("x_v", "m3", T::from_f64_lossy(p.initial_volume))
        .input("w_s", PortKind::Continuous)
        .input("w_d", PortKind::Continuous)
        .output("v_tank", PortKind::Sentinel)
        .param("V_max", T::from_f64_lossy(p.max_volume))
        .mode(
            ModeDefinition::new(HEALTHY)
                .flow("x_v", net())
                .output("v_tank", state("x_v"))
                .invariant(state("x_v").gt(lit(0.0)).and(state("x_v").le(param("V_max")))),
        )
        .mode(
            ModeDefinition::new(DRAINED)
                .flow("x_v", lit(0.0).max(net()))
                .output("v_tank", lit(0.0))
                .invariant(state("x_v").ge(lit(0.0))),
        )
        .mode(
            ModeDefinition::new(OVERFLOW)
                .flow("x_v", lit(0.0).min(net()))
                .output("v_tank", param("V_max"))
                .invariant(state("x_v").le(param("V_max"))),
        )
        .transition(
            Transition::new("tank.drain", HEALTHY, DRAINED, 0, state("x_v").le(lit(0.0))).reset("x_v", lit(0.0)),
        )
        .transition(
            Transition::new("tank.overflow", HEALTHY, OVERFLOW, 1, state("x_v").gt(param("V_max")))
                .reset("x_v", param("V_max")),
        )
        .transition(Transition::new("tank.refill", DRAINED, HEALTHY, 0, input("w_s").gt(input("w_d"))))
        .transition(Transition::new("tank.spill_relief", OVERFLOW, HEALTHY, 0, input("w_d").gt(input("w_s"))))
        .initial_mode(if p.initial_volume > 0.0 { HEALTHY } else { DRAINED })
        .build()
        .expect("tank definition is well-formed");
    Ok(automaton)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hybrid::Silent;
    use crate::models::port_values;

    fn tank() -> OpenHybridAutomaton<f64> {
        make_tank(&TankParams::default()).unwrap()
    }

    #[test]
    fn healthy_reports_volume() {
        let a = tank();
        let out = a.evaluate_outputs(&a.initial_state(), &port_values(&[("w_s", 0.0), ("w_d", 1.0)]), &mut Silent);
        assert_eq!(out.unwrap()["v_tank"], 50.0);
    }

    #[test]
    fn euler_volume_step() {
        let a = tank();
        let s = a.initial_state();
        let x = a.integrate_flow(&s, &port_values(&[("w_s", 2.0), ("w_d", 1.0)]), 0.1).unwrap();
        assert_eq!(x, vec![50.1]);
        let x = a.integrate_flow(&s, &port_values(&[("w_s", 1.0), ("w_d", 1.0)]), 0.1).unwrap();
        assert_eq!(x, vec![50.0]);
    }

    #[test]
    fn draining_below_zero_clamps() {
        // 0.05 - 0.1 * 1 = -0.05 <= 0
        let a = tank();
        let s = a.state_in(HEALTHY, vec![0.05]).unwrap();
        let out = a.step(&s, &port_values(&[("w_s", 0.0), ("w_d", 1.0)]), 0.1, &mut Silent).unwrap();
        assert_eq!(out.outputs["v_tank"], 0.05);
        assert_eq!(a.mode_name(out.state.mode), DRAINED);
        assert_eq!(out.state.x, vec![0.0]);
    }

    #[test]
    fn filling_past_capacity_overflows() {
        // 99.95 + 0.1 * (2 - 1) = 100.05 > 100
        let a = tank();
        let s = a.state_in(HEALTHY, vec![99.95]).unwrap();
        let out = a.step(&s, &port_values(&[("w_s", 2.0), ("w_d", 1.0)]), 0.1, &mut Silent).unwrap();
        assert_eq!(a.mode_name(out.state.mode), OVERFLOW);
        assert_eq!(out.state.x, vec![100.0]);
    }

    #[test]
    fn drained_refills_when_supply_exceeds_demand() {
        let a = tank();
        let s = a.state_in(DRAINED, vec![0.0]).unwrap();
        let out = a.step(&s, &port_values(&[("w_s", 2.0), ("w_d", 1.0)]), 0.1, &mut Silent).unwrap();
        assert_eq!(a.mode_name(out.state.mode), HEALTHY);
        assert!(out.state.x[0] > 0.0);
        let out = a.step(&s, &port_values(&[("w_s", 1.0), ("w_d", 1.0)]), 0.1, &mut Silent).unwrap();
        assert_eq!(a.mode_name(out.state.mode), DRAINED);
        assert_eq!(out.state.x, vec![0.0]);
    }

    #[test]
    fn overflow_relieved_by_demand() {
        let a = tank();
        let s = a.state_in(OVERFLOW, vec![100.0]).unwrap();
        let out = a.step(&s, &port_values(&[("w_s", 0.0), ("w_d", 1.0)]), 0.1, &mut Silent).unwrap();
        assert_eq!(a.mode_name(out.state.mode), HEALTHY);
        assert_eq!(out.outputs["v_tank"], 100.0);
        let out = a.step(&s, &port_values(&[("w_s", 3.0), ("w_d", 1.0)]), 0.1, &mut Silent).unwrap();
        assert_eq!(out.state.x, vec![100.0]);
    }

    #[test]
    fn empty_start_is_drained() {
        let a: OpenHybridAutomaton<f64> = make_tank(&TankParams { initial_volume: 0.0, max_volume: 100.0 }).unwrap();
        assert_eq!(a.mode_name(a.initial_state().mode), DRAINED);
    }
}
