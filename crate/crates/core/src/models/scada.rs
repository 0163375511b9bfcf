//! SCADA: mirrors the substation breaker and relays operator commands.

use crate::hybrid::{
    constant, input, param, state, AutomatonBuilder, ModeDefinition, OpenHybridAutomaton, PortKind, Transition,
};
use crate::models::params::{ParamError, ScadaParams};
use crate::models::{lit, names};
use crate::scalar::Scalar;

pub const CLOSED: &str = "Closed";
pub const OPEN: &str = "Open";
pub const CONN_DOWN: &str = "ConnDown";

/// Modes `Closed` (initial), `Open` and `ConnDown`.
///
/// Inputs `p_m` (substation measurement, -1 when the link is down) and `s_OP`
/// (operator request to open); output `s_CB` = 0 / 1 / -1. `noise_std` sets
/// the default power-off threshold.
pub fn make_scada<T: Scalar>(p: &ScadaParams, noise_std: f64) -> Result<OpenHybridAutomaton<T>, ParamError> {
    p.validate()?;
    let lost = || input("p_m").equals(lit(-1.0));
    let reset = |t: Transition<T>| t.reset("x_ts", constant(T::zero()));
    let automaton = AutomatonBuilder::new(names::SCADA)
        .continuous("x_ts", "min", T::zero())
        .input("p_m", PortKind::Sentinel)
        .input("s_OP", PortKind::Discrete)
        .output("s_CB", PortKind::Sentinel)
        .param("T_d", T::from_f64_lossy(p.transmission_delay))
        .param("T_s", T::from_f64_lossy(p.safety_time))
        .param("theta_off", T::from_f64_lossy(p.resolved_off_threshold(noise_std)))
        .mode(ModeDefinition::new(CLOSED).flow("x_ts", lit(1.0)).output("s_CB", lit(0.0)))
        .mode(ModeDefinition::new(OPEN).flow("x_ts", lit(1.0)).output("s_CB", lit(1.0)))
        .mode(ModeDefinition::new(CONN_DOWN).flow("x_ts", lit(1.0)).output("s_CB", lit(-1.0)))
        .transition(reset(Transition::new("scada.conn_lost", CLOSED, CONN_DOWN, 0, lost())))
        .transition(reset(Transition::new("scada.conn_lost", OPEN, CONN_DOWN, 0, lost())))
        .transition(reset(Transition::new(
            "scada.open",
            CLOSED,
            OPEN,
            1,
            input("s_OP").equals(lit(1.0)).or(input("p_m").lt(param("theta_off"))).and(state("x_ts").ge(param("T_d"))),
        )))
        .transition(reset(Transition::new(
            "scada.close",
            OPEN,
            CLOSED,
            1,
            input("s_OP").equals(lit(0.0)).and(state("x_ts").ge(param("T_s"))),
        )))
        .transition(reset(Transition::new(
            "scada.conn_restored",
            CONN_DOWN,
            OPEN,
            1,
            input("p_m").not_equals(lit(-1.0)).and(input("p_m").lt(param("theta_off"))),
        )))
        .transition(reset(Transition::new(
            "scada.conn_restored",
            CONN_DOWN,
            CLOSED,
            2,
            input("p_m").not_equals(lit(-1.0)).and(input("p_m").ge(param("theta_off"))),
        )))
        .initial_mode(CLOSED)
        .build()
        .expect("scada definition is well-formed");
    Ok(automaton)
}
