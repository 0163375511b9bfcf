//! Pump: refills the tank on low level, within duty-cycle limits.

use crate::hybrid::{input, param, state, AutomatonBuilder, ModeDefinition, OpenHybridAutomaton, PortKind, Transition};
use crate::models::params::{ParamError, PumpParams};
use crate::models::{lit, names};
use crate::scalar::Scalar;

pub const PUMP_OFF: &str = "PumpOff";
pub const PUMP_ON: &str = "PumpOn";
pub const FAULT: &str = "Fault";

/// Modes `PumpOff` (initial), `PumpOn` and `Fault`.
///
/// Inputs `v_tank` (tank level, -1 when the link is down), `p_ps` (supplied
/// power) and `phi_p` (fault trigger); outputs `w_s` and `p_pd`. The timer
/// `x_t` counts rest or run time and is frozen in `Fault`.
///
/// Only a running pump faults on missing power, and a start additionally
/// requires the power to be present, so an unpowered idle pump stays off
/// instead of cycling through start and fault. Leaving `Fault` sets
/// `x_t := T_off`, making the pump immediately ready to start.
pub fn make_pump<T: Scalar>(p: &PumpParams, tank_max: f64) -> Result<OpenHybridAutomaton<T>, ParamError> {
    p.validate(tank_max)?;
    let lost = || input("v_tank").equals(lit(-1.0));
    let tripped = || input("phi_p").equals(lit(1.0));
    let automaton = AutomatonBuilder::new(names::PUMP)
        .continuous("x_t", "min", T::zero())
        .input("v_tank", PortKind::Sentinel)
        .input("p_ps", PortKind::Continuous)
        .input("phi_p", PortKind::Discrete)
        .output("w_s", PortKind::Continuous)
        .output("p_pd", PortKind::Continuous)
        .param("V_th", T::from_f64_lossy(p.start_threshold))
        .param("T_off", T::from_f64_lossy(p.min_rest))
        .param("T_on", T::from_f64_lossy(p.max_run))
        .param("W_avg", T::from_f64_lossy(p.supply_rate))
        .param("P_p", T::from_f64_lossy(p.working_power))
        .param("V_max", T::from_f64_lossy(p.resolved_max_volume(tank_max)))
        .mode(ModeDefinition::new(PUMP_OFF).flow("x_t", lit(1.0)).output("w_s", lit(0.0)).output("p_pd", lit(0.0)))
        .mode(
            ModeDefinition::new(PUMP_ON)
                .flow("x_t", lit(1.0))
                .output("w_s", param("W_avg"))
                .output("p_pd", param("P_p")),
        )
        .mode(ModeDefinition::new(FAULT).flow("x_t", lit(0.0)).output("w_s", lit(0.0)).output("p_pd", lit(0.0)))
        .transition(Transition::new("pump.fault", PUMP_OFF, FAULT, 0, lost().or(tripped())))
        .transition(Transition::new(
            "pump.fault",
            PUMP_ON,
            FAULT,
            0,
            input("p_ps").lt(param("P_p")).or(lost()).or(tripped()),
        ))
        .transition(
            Transition::new(
                "pump.start",
                PUMP_OFF,
                PUMP_ON,
                1,
                input("v_tank")
                    .ge(lit(0.0))
                    .and(input("v_tank").lt(param("V_th")))
                    .and(state("x_t").ge(param("T_off")))
                    .and(input("p_ps").ge(param("P_p"))),
            )
            .reset("x_t", lit(0.0)),
        )
        .transition(
            Transition::new(
                "pump.stop",
                PUMP_ON,
                PUMP_OFF,
                1,
                input("v_tank").ge(param("V_max")).or(state("x_t").gt(param("T_on"))),
            )
            .reset("x_t", lit(0.0)),
        )
        .transition(
            Transition::new(
                "pump.reset",
                FAULT,
                PUMP_OFF,
                0,
                input("v_tank").not_equals(lit(-1.0)).and(input("phi_p").equals(lit(0.0))),
            )
            .reset("x_t", param("T_off")),
        )
        .initial_mode(PUMP_OFF)
        .build()
        .expect("pump definition is well-formed");
    Ok(automaton)
}
