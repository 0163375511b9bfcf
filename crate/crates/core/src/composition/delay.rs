//! Fixed-length FIFO delay lines used as connection latches.

use std::collections::VecDeque;

use crate::composition::CompositionError;
use crate::scalar::Scalar;

/// Ring buffer that emits each value exactly `capacity` pushes after it was
/// inserted. A capacity of one is a unit-delay latch.
#[derive(Clone, Debug, PartialEq)]
pub struct DelayLine<T> {
    slots: VecDeque<T>,
}

/// Number of whole steps needed to cover `duration`, rounded up so a signal is
/// never delivered early. Quotients within 1e-9 of an integer are snapped to it
/// so that e.g. `0.2 / 0.1` maps to 2.
pub fn steps_for<T: Scalar>(duration: T, dt: T) -> usize {
    let q = (duration / dt).as_f64();
    if q <= 0.0 {
        return 0;
    }
    let r = q.round();
    if (q - r).abs() < 1e-9 {
        r as usize
    } else {
        q.ceil() as usize
    }
}

impl<T: Scalar> DelayLine<T> {
    pub fn new(capacity: usize, idle: T) -> Result<Self, CompositionError> {
        if capacity == 0 {
            return Err(CompositionError::ZeroCapacity);
        }
        Ok(Self { slots: std::iter::repeat_n(idle, capacity).collect() })
    }

    /// Line covering `duration` at step `dt`.
    pub fn for_duration(duration: T, dt: T, idle: T) -> Result<Self, CompositionError> {
        if duration.is_nan() || dt.is_nan() || duration <= T::zero() || dt <= T::zero() {
            return Err(CompositionError::ZeroCapacity);
        }
        Self::new(steps_for(duration, dt), idle)
    }

    pub fn capacity(&self) -> usize {
        self.slots.len()
    }

    /// Value the next `push_pop` will emit.
    pub fn peek(&self) -> T {
        *self.slots.front().expect("delay line is never empty")
    }

    pub fn push_pop(&mut self, value: T) -> T {
        let out = self.slots.pop_front().expect("delay line is never empty");
        self.slots.push_back(value);
        out
    }

    pub fn flush(&mut self, sentinel: T) {
        self.slots.iter_mut().for_each(|s| *s = sentinel);
    }

    pub fn fill(&mut self, value: T) {
        self.flush(value);
    }

    pub fn contents(&self) -> impl Iterator<Item = T> + '_ {
        self.slots.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn capacity_three_fifo() {
        let mut d = DelayLine::new(3, 0.0).unwrap();
        let out: Vec<f64> = [1.0, 2.0, 3.0, 4.0].into_iter().map(|v| d.push_pop(v)).collect();
        assert_eq!(out, [0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn capacity_one_is_a_latch() {
        let mut d = DelayLine::new(1, 0.0).unwrap();
        assert_eq!(d.push_pop(5.0), 0.0);
        assert_eq!(d.peek(), 5.0);
        assert_eq!(d.push_pop(6.0), 5.0);
    }

    #[test]
    fn ceiling_rule() {
        assert_eq!(steps_for(0.2, 0.1), 2);
        assert_eq!(steps_for(0.25, 0.1), 3);
        assert_eq!(steps_for(0.0, 0.1), 0);
        assert_eq!(DelayLine::for_duration(0.2, 0.1, 0.0).unwrap().capacity(), 2);
        assert_eq!(DelayLine::for_duration(0.2f32, 0.1, 0.0).unwrap().capacity(), 2);
    }

    #[test]
    fn zero_capacity_rejected() {
        assert!(matches!(DelayLine::new(0, 0.0), Err(CompositionError::ZeroCapacity)));
        assert!(DelayLine::for_duration(0.0, 0.1, 0.0).is_err());
        assert!(DelayLine::for_duration(-1.0, 0.1, 0.0).is_err());
    }

    #[test]
    fn flush_then_pop_is_sentinel() {
        let mut d = DelayLine::new(2, 7.0).unwrap();
        d.flush(-1.0);
        assert!(d.contents().all(|v| v == -1.0));
        assert_eq!(d.push_pop(1.0), -1.0);
    }

    #[test]
    fn refill_after_flush_takes_capacity_pushes() {
        let mut d = DelayLine::new(3, 0.0).unwrap();
        d.flush(-1.0);
        let out: Vec<f64> = [10.0, 11.0, 12.0, 13.0].into_iter().map(|v| d.push_pop(v)).collect();
        assert_eq!(out, [-1.0, -1.0, -1.0, 10.0]);
    }

    proptest! {
        #[test]
        fn emits_input_exactly_capacity_pushes_later(
            cap in 1usize..8,
            xs in proptest::collection::vec(-100.0f64..100.0, 1..40),
        ) {
            let mut d = DelayLine::new(cap, 0.0).unwrap();
            let out: Vec<f64> = xs.iter().map(|&v| d.push_pop(v)).collect();
            for (i, o) in out.iter().enumerate() {
                let expected = if i < cap { 0.0 } else { xs[i - cap] };
                prop_assert_eq!(*o, expected);
            }
        }
    }
}
