//! Power substation: supplies the city until tripped remotely or by overload.

use crate::hybrid::{
    constant, input, noise, param, state, AutomatonBuilder, Expr, ModeDefinition, OpenHybridAutomaton, PortKind,
    Transition,
};
use crate::models::params::{ParamError, SubstationParams};
use crate::models::{lit, names};
use crate::scalar::Scalar;

pub const SUPPLY_POWER: &str = "SupplyPower";
pub const SWITCH_OFF: &str = "SwitchOff";

/// Modes `SupplyPower` (initial) and `SwitchOff`.
///
/// Inputs `s_CB` (breaker command, -1 when the link is down) and `p_d`
/// (demand); outputs `p_s` (supply), `p_m` (noisy measurement of `p_s`,
/// floored at 0) and `avail` (1 while energized). The timer `x_tp` restarts
/// on every jump.
pub fn make_substation<T: Scalar>(p: &SubstationParams) -> Result<OpenHybridAutomaton<T>, ParamError> {
    p.validate()?;
    let measured = |supply: Expr<T>| (supply + noise(param("sigma"))).max(lit(0.0));
    let automaton = AutomatonBuilder::new(names::SUBSTATION)
        .continuous("x_tp", "min", T::zero())
        .input("s_CB", PortKind::Sentinel)
        .input("p_d", PortKind::Continuous)
        .output("p_s", PortKind::Continuous)
        .output("p_m", PortKind::Sentinel)
        .output("avail", PortKind::Discrete)
        .param("P_lim", T::from_f64_lossy(p.power_limit))
        .param("T_s", T::from_f64_lossy(p.safety_period))
        .param("sigma", T::from_f64_lossy(p.noise_std))
        .mode(
            ModeDefinition::new(SUPPLY_POWER)
                .flow("x_tp", lit(1.0))
                .output("p_s", input("p_d"))
                .output("p_m", measured(input("p_d")))
                .output("avail", lit(1.0)),
        )
        .mode(
            ModeDefinition::new(SWITCH_OFF)
                .flow("x_tp", lit(1.0))
                .output("p_s", lit(0.0))
                .output("p_m", measured(lit(0.0)))
                .output("avail", lit(0.0)),
        )
        .transition(
            Transition::new(
                "substation.trip",
                SUPPLY_POWER,
                SWITCH_OFF,
                0,
                input("s_CB").equals(lit(1.0)).or(input("p_d").ge(param("P_lim"))),
            )
            .reset("x_tp", constant(T::zero())),
        )
        .transition(
            Transition::new(
                "substation.restore",
                SWITCH_OFF,
                SUPPLY_POWER,
                0,
                input("s_CB").equals(lit(0.0)).and(input("p_d").lt(param("P_lim"))).and(state("x_tp").ge(param("T_s"))),
            )
            .reset("x_tp", constant(T::zero())),
        )
        .initial_mode(SUPPLY_POWER)
        .build()
        .expect("substation definition is well-formed");
    Ok(automaton)
}
