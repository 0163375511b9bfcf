//! Communication network: relays three signals, runs on UPS during outages.

use crate::hybrid::{
    constant, input, param, state, AutomatonBuilder, ModeDefinition, OpenHybridAutomaton, PortKind, Transition,
};
use crate::models::params::{NetworkParams, ParamError};
use crate::models::{lit, names};
use crate::scalar::Scalar;

pub const HEALTHY: &str = "Healthy";
pub const UPS_USAGE: &str = "UPSUsage";
pub const NET_DOWN: &str = "NetDown";

/// Relayed signal pairs `(input, output)`.
pub const SIGNALS: [(&str, &str); 3] = [("s_1", "s_1_out"), ("s_2", "s_2_out"), ("s_3", "s_3_out")];

/// Modes `Healthy` (initial), `UPSUsage` and `NetDown`.
///
/// Inputs `p_ns` (supplied power), `phi_n` (fault trigger) and `s_1..s_3`;
/// outputs `s_k_out` and `p_nd` (power demand). While up, each `s_k_out`
/// passes `s_k` through; the per-signal transmission delays sit on the
/// outgoing connections (see `make_micropolis`). Entering `NetDown` flushes
/// those lines to -1. `x_t_ups` counts UPS time and is cleared on return to
/// `Healthy`.
pub fn make_network<T: Scalar>(p: &NetworkParams) -> Result<OpenHybridAutomaton<T>, ParamError> {
    p.validate()?;
    let up = |name: &str| {
        let mut m = ModeDefinition::new(name).output("p_nd", param("P_n"));
        for (i, o) in SIGNALS {
            m = m.output(o, input(i));
        }
        m
    };
    let mut down = ModeDefinition::new(NET_DOWN).flow("x_t_ups", lit(0.0)).output("p_nd", lit(0.0)).flush_on_entry();
    for (_, o) in SIGNALS {
        down = down.output(o, lit(-1.0));
    }
    let mut b = AutomatonBuilder::new(names::NETWORK)
        .continuous("x_t_ups", "min", T::zero())
        .input("p_ns", PortKind::Continuous)
        .input("phi_n", PortKind::Discrete);
    for (i, _) in SIGNALS {
        b = b.input(i, PortKind::Sentinel);
    }
    for (_, o) in SIGNALS {
        b = b.output(o, PortKind::Sentinel);
    }
    let fault = || input("phi_n").equals(lit(1.0));
    let automaton = b
        .output("p_nd", PortKind::Continuous)
        .param("P_n", T::from_f64_lossy(p.working_power))
        .param("T_ups", T::from_f64_lossy(p.ups_duration))
        .mode(up(HEALTHY).flow("x_t_ups", lit(0.0)))
        .mode(up(UPS_USAGE).flow("x_t_ups", lit(1.0)))
        .mode(down)
        .transition(Transition::new("network.fault", HEALTHY, NET_DOWN, 0, fault()))
        .transition(Transition::new("network.fault", UPS_USAGE, NET_DOWN, 0, fault()))
        .transition(
            Transition::new("network.ups_start", HEALTHY, UPS_USAGE, 1, input("p_ns").lt(param("P_n")))
                .reset("x_t_ups", constant(T::zero())),
        )
        .transition(Transition::new(
            "network.ups_exhausted",
            UPS_USAGE,
            NET_DOWN,
            1,
            state("x_t_ups").ge(param("T_ups")),
        ))
        .transition(
            Transition::new("network.power_restored", UPS_USAGE, HEALTHY, 2, input("p_ns").ge(param("P_n")))
                .reset("x_t_ups", constant(T::zero())),
        )
        .transition(
            Transition::new(
                "network.recover",
                NET_DOWN,
                HEALTHY,
                1,
                input("phi_n").equals(lit(0.0)).and(input("p_ns").ge(param("P_n"))),
            )
            .reset("x_t_ups", constant(T::zero())),
        )
        .initial_mode(HEALTHY)
        .build()
        .expect("network definition is well-formed");
    Ok(automaton)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hybrid::{PortValues, Silent};
    use crate::models::port_values;

    fn inputs(p_ns: f64, phi_n: f64) -> PortValues<f64> {
        port_values(&[("p_ns", p_ns), ("phi_n", phi_n), ("s_1", 210.0), ("s_2", 0.0), ("s_3", 50.0)])
    }

    fn next(mode: &str, x: f64, p_ns: f64, phi_n: f64) -> (String, f64) {
        let a = make_network::<f64>(&NetworkParams::default()).unwrap();
        let out = a.step(&a.state_in(mode, vec![x]).unwrap(), &inputs(p_ns, phi_n), 0.1, &mut Silent).unwrap();
        (a.mode_name(out.state.mode).to_owned(), out.state.x[0])
    }

    #[test]
    fn power_loss_switches_to_ups() {
        assert_eq!(next(HEALTHY, 0.0, 0.0, 0.0).0, UPS_USAGE);
        assert_eq!(next(HEALTHY, 0.0, 10.0, 0.0).0, HEALTHY);
    }

    #[test]
    fn ups_exhaustion() {
        assert_eq!(next(UPS_USAGE, 30.0, 0.0, 0.0).0, NET_DOWN);
        assert_eq!(next(UPS_USAGE, 10.0, 0.0, 0.0), (UPS_USAGE.to_owned(), 10.1));
    }

    #[test]
    fn fault_wins_regardless_of_power() {
        assert_eq!(next(HEALTHY, 0.0, 10.0, 1.0).0, NET_DOWN);
        assert_eq!(next(HEALTHY, 0.0, 0.0, 1.0).0, NET_DOWN);
        assert_eq!(next(UPS_USAGE, 3.0, 0.0, 1.0).0, NET_DOWN);
    }

    #[test]
    fn power_back_recharges_ups() {
        assert_eq!(next(UPS_USAGE, 12.0, 10.0, 0.0), (HEALTHY.to_owned(), 0.0));
    }

    #[test]
    fn recovery_needs_fault_cleared_and_power() {
        assert_eq!(next(NET_DOWN, 30.0, 10.0, 0.0), (HEALTHY.to_owned(), 0.0));
        assert_eq!(next(NET_DOWN, 30.0, 10.0, 1.0).0, NET_DOWN);
        assert_eq!(next(NET_DOWN, 30.0, 0.0, 0.0).0, NET_DOWN);
    }

    #[test]
    fn outputs_pass_through_or_sentinel() {
        let a = make_network::<f64>(&NetworkParams::default()).unwrap();
        let up = a.evaluate_outputs(&a.initial_state(), &inputs(10.0, 0.0), &mut Silent).unwrap();
        assert_eq!((up["s_1_out"], up["s_2_out"], up["s_3_out"], up["p_nd"]), (210.0, 0.0, 50.0, 10.0));
        let down = a.state_in(NET_DOWN, vec![0.0]).unwrap();
        let out = a.evaluate_outputs(&down, &inputs(10.0, 1.0), &mut Silent).unwrap();
        assert_eq!((out["s_1_out"], out["s_2_out"], out["s_3_out"], out["p_nd"]), (-1.0, -1.0, -1.0, 0.0));
        assert!(a.mode(down.mode).unwrap().flush_on_entry);
    }
}
