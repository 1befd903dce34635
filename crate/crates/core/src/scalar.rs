//! Scalar abstraction shared by every module.
//!
//! All geometry is written once against [`Real`] and instantiated for `f32`
//! and `f64`. The associated constants carry the precision-dependent
//! defaults (comparison tolerances and the degeneracy guard), so that code
//! written generically does not bake in double-precision thresholds.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Default relative comparison tolerance.
    const REL_TOL: f64;
    /// Default absolute comparison floor.
    const ABS_TOL: f64;
    /// A triangle is degenerate when its area is below this multiple of the
    /// squared longest side.
    const DEGENERACY: f64;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn sqrt3() -> Self {
        Self::lit(3.0).sqrt()
    }

    /// Full turn, 2π.
    #[inline]
    fn tau() -> Self {
        Self::TAU()
    }
}

impl Real for f64 {
    const REL_TOL: f64 = 1e-9;
    const ABS_TOL: f64 = 1e-12;
    const DEGENERACY: f64 = 1e-12;
}

impl Real for f32 {
    const REL_TOL: f64 = 1e-4;
    const ABS_TOL: f64 = 1e-6;
    const DEGENERACY: f64 = 1e-6;
}

/// Reduces an angle to `[0, 2π)`.
pub fn wrap_two_pi<T: Real>(theta: T) -> T {
    let tau = T::tau();
    let r = theta % tau;
    let r = if r < T::zero() { r + tau } else { r };
    // rem of a tiny negative can round up to exactly 2π
    if r >= tau {
        T::zero()
    } else {
        r
    }
}

/// Reduces an angle to `(-π, π]`.
pub fn wrap_pi<T: Real>(theta: T) -> T {
    let r = wrap_two_pi(theta);
    if r > T::PI() {
        r - T::tau()
    } else {
        r
    }
}

/// Comparison tolerance: relative with an absolute floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    pub rel: T,
    pub abs: T,
}

impl<T: Real> Default for Tolerance<T> {
    fn default() -> Self {
        Self {
            rel: T::lit(T::REL_TOL),
            abs: T::lit(T::ABS_TOL),
        }
    }
}

impl<T: Real> Tolerance<T> {
    pub fn new(rel: T, abs: T) -> Self {
        Self { rel, abs }
    }

    /// Uses `eps` both as the relative tolerance and as the absolute floor.
    pub fn uniform(eps: T) -> Self {
        Self { rel: eps, abs: eps }
    }

    /// `|a - b| <= max(abs, rel * max(|a|, |b|))`.
    #[inline]
    pub fn eq(&self, a: T, b: T) -> bool {
        let scale = a.abs().max(b.abs());
        (a - b).abs() <= self.abs.max(self.rel * scale)
    }

    /// Whether `x` is negligible compared to a quantity of size `scale`.
    #[inline]
    pub fn is_zero(&self, x: T, scale: T) -> bool {
        x.abs() <= self.abs.max(self.rel * scale.abs())
    }
}
