//! Scalar abstraction shared by every numeric type in the engine.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating point type the automata, compositions and models are generic over.
///
/// Implemented for `f32` and `f64`. Traces and analysis always work in `f64`,
/// so every scalar must convert losslessly enough to `f64` for reporting.
pub trait Scalar: Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// Reserved value on sentinel-capable ports meaning "connection lost".
    const SENTINEL: Self;

    fn from_f64_lossy(v: f64) -> Self;

    fn as_f64(self) -> f64;
}

macro_rules! impl_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const SENTINEL: Self = -1.0;

            #[inline]
            fn from_f64_lossy(v: f64) -> Self {
                v as $t
            }

            #[inline]
            fn as_f64(self) -> f64 {
                self as f64
            }
        }
    };
}

impl_scalar!(f32);
impl_scalar!(f64);
