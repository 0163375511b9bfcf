//! Stateless junction blocks for demand aggregation and power distribution.

use crate::composition::CompositionError;
use crate::hybrid::{Direction, Port, PortKind, PortValues};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum JunctionKind<T> {
    /// Output is the sum of all inputs.
    Sum,
    /// Output is `level` while the single indicator input is 1, else 0.
    Gate {
        level: T,
    },
    Constant {
        value: T,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct JunctionBlock<T> {
    name: String,
    kind: JunctionKind<T>,
    inputs: Vec<Port>,
    output: Port,
}

fn port(name: &str, direction: Direction) -> Port {
    Port { name: name.to_owned(), direction, kind: PortKind::Continuous }
}

impl<T: Scalar> JunctionBlock<T> {
    pub fn sum(name: &str, inputs: &[&str], output: &str) -> Result<Self, CompositionError> {
        if inputs.is_empty() {
            return Err(CompositionError::InvalidJunction {
                node: name.to_owned(),
                reason: "sum needs at least one input".into(),
            });
        }
        for (i, a) in inputs.iter().enumerate() {
            if inputs[..i].contains(a) {
                return Err(CompositionError::InvalidJunction {
                    node: name.to_owned(),
                    reason: format!("duplicate input `{a}`"),
                });
            }
        }
        Ok(Self {
            name: name.to_owned(),
            kind: JunctionKind::Sum,
            inputs: inputs.iter().map(|n| port(n, Direction::Input)).collect(),
            output: port(output, Direction::Output),
        })
    }

    pub fn gate(name: &str, level: T, indicator: &str, output: &str) -> Self {
        Self {
            name: name.to_owned(),
            kind: JunctionKind::Gate { level },
            inputs: vec![Port { kind: PortKind::Discrete, ..port(indicator, Direction::Input) }],
            output: port(output, Direction::Output),
        }
    }

    pub fn constant(name: &str, value: T, output: &str) -> Self {
        Self {
            name: name.to_owned(),
            kind: JunctionKind::Constant { value },
            inputs: Vec::new(),
            output: port(output, Direction::Output),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &JunctionKind<T> {
        &self.kind
    }

    pub fn input_ports(&self) -> &[Port] {
        &self.inputs
    }

    pub fn output_port(&self) -> &Port {
        &self.output
    }

    pub fn evaluate(&self, inputs: &PortValues<T>) -> Result<T, CompositionError> {
        let get = |p: &Port| {
            inputs
                .get(&p.name)
                .copied()
                .ok_or_else(|| CompositionError::MissingExogenous { node: self.name.clone(), port: p.name.clone() })
        };
        Ok(match &self.kind {
            JunctionKind::Sum => {
                let mut acc = T::zero();
                for p in &self.inputs {
                    acc = acc + get(p)?;
                }
                acc
            }
            JunctionKind::Gate { level } => {
                if get(&self.inputs[0])? == T::one() {
                    *level
                } else {
                    T::zero()
                }
            }
            JunctionKind::Constant { value } => *value,
        })
    }
}
