//! Closed-loop composition of the five component models.

use crate::composition::{steps_for, CompositionError, CompositionNetwork, DependencyType, JunctionBlock};
use crate::models::params::MicropolisParams;
use crate::models::{make_network, make_pump, make_scada, make_substation, make_tank, names};
use crate::scalar::Scalar;

use DependencyType::{Cyber, Internal, Logical, Physical};

/// Free inputs of the composed model as `(node, port)`.
pub const FREE_INPUTS: [(&str, &str); 5] = [
    (names::DEMAND, "d_city"),
    (names::TANK, "w_d"),
    (names::SCADA, "s_OP"),
    (names::NETWORK, "phi_n"),
    (names::PUMP, "phi_p"),
];

#[derive(Debug, thiserror::Error)]
pub enum MicropolisError {
    #[error(transparent)]
    Param(#[from] crate::models::ParamError),
    #[error(transparent)]
    Composition(#[from] CompositionError),
}

/// Wires the five automata with a demand sum block and two power gates.
///
/// The substation's demand is `d_city + p_nd + p_pd`; the pump and the
/// network receive their working power while the substation reports `avail`.
/// The three relayed signals (measurement, breaker command, tank level) pass
/// through the network, whose transmission delays `T_1..T_3` are realised as
/// extra delay steps on its outgoing lines.
pub fn make_micropolis<T: Scalar>(p: &MicropolisParams, dt: T) -> Result<CompositionNetwork<T>, MicropolisError> {
    p.validate()?;
    let delay = |d: f64| steps_for(T::from_f64_lossy(d), dt);
    let mut net = CompositionNetwork::new();
    net.add_node(make_substation::<T>(&p.substation)?)?;
    net.add_node(make_scada::<T>(&p.scada, p.substation.noise_std)?)?;
    net.add_node(make_network::<T>(&p.network)?)?;
    net.add_node(make_tank::<T>(&p.tank)?)?;
    net.add_node(make_pump::<T>(&p.pump, p.tank.max_volume)?)?;
    net.add_node(JunctionBlock::<T>::sum(names::DEMAND, &["d_city", "p_nd", "p_pd"], "p_d")?)?;
    net.add_node(JunctionBlock::gate(names::PUMP_FEED, T::from_f64_lossy(p.pump.working_power), "avail", "p_ps"))?;
    net.add_node(JunctionBlock::gate(
        names::NETWORK_FEED,
        T::from_f64_lossy(p.network.working_power),
        "avail",
        "p_ns",
    ))?;

    use names::*;
    net.connect((SUBSTATION, "avail"), (PUMP_FEED, "avail"), Physical)?;
    net.connect((PUMP_FEED, "p_ps"), (PUMP, "p_ps"), Physical)?;
    net.connect((SUBSTATION, "avail"), (NETWORK_FEED, "avail"), Physical)?;
    net.connect((NETWORK_FEED, "p_ns"), (NETWORK, "p_ns"), Physical)?;

    net.connect((SUBSTATION, "p_m"), (NETWORK, "s_1"), Cyber)?;
    net.connect_delayed((NETWORK, "s_1_out"), (SCADA, "p_m"), Cyber, delay(p.network.delay_measurement))?;
    net.connect((SCADA, "s_CB"), (NETWORK, "s_2"), Cyber)?;
    net.connect_delayed((NETWORK, "s_2_out"), (SUBSTATION, "s_CB"), Cyber, delay(p.network.delay_command))?;
    net.connect((TANK, "v_tank"), (NETWORK, "s_3"), Cyber)?;
    net.connect_delayed((NETWORK, "s_3_out"), (PUMP, "v_tank"), Cyber, delay(p.network.delay_level))?;

    net.connect((PUMP, "w_s"), (TANK, "w_s"), Internal)?;

    net.connect((NETWORK, "p_nd"), (DEMAND, "p_nd"), Logical)?;
    net.connect((PUMP, "p_pd"), (DEMAND, "p_pd"), Logical)?;
    net.connect((DEMAND, "p_d"), (SUBSTATION, "p_d"), Logical)?;
    Ok(net)
}
