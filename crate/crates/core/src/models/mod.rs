//! The five infrastructure component models and their closed-loop
//! composition: power substation, SCADA, communication network, water tank
//! and pump.

pub mod comm_network;
pub mod micropolis;
pub mod params;
pub mod pump;
pub mod scada;
pub mod substation;
pub mod tank;

use crate::hybrid::{constant, Expr, PortValues};
use crate::scalar::Scalar;

pub use comm_network::make_network;
pub use micropolis::{make_micropolis, FREE_INPUTS};
pub use params::{MicropolisParams, NetworkParams, ParamError, PumpParams, ScadaParams, SubstationParams, TankParams};
pub use pump::make_pump;
pub use scada::make_scada;
pub use substation::make_substation;
pub use tank::make_tank;

/// Node names used in the composed network.
pub mod names {
    pub const SUBSTATION: &str = "substation";
    pub const SCADA: &str = "scada";
    pub const NETWORK: &str = "network";
    pub const TANK: &str = "tank";
    pub const PUMP: &str = "pump";
    /// Sum block computing the substation's power demand.
    pub const DEMAND: &str = "demand";
    /// Gate block feeding the pump.
    pub const PUMP_FEED: &str = "pump_feed";
    /// Gate block feeding the network antennas.
    pub const NETWORK_FEED: &str = "network_feed";

    /// The five component automata.
    pub const COMPONENTS: [&str; 5] = [SUBSTATION, SCADA, NETWORK, TANK, PUMP];
}

pub(crate) fn lit<T: Scalar>(v: f64) -> Expr<T> {
    constant(T::from_f64_lossy(v))
}

/// Builds a port map from `(name, value)` pairs.
pub fn port_values<T: Scalar>(pairs: &[(&str, f64)]) -> PortValues<T> {
    pairs.iter().map(|&(k, v)| (k.to_owned(), T::from_f64_lossy(v))).collect()
}
