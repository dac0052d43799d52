//! Scalar abstraction shared by every numeric module.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar: `f32` or `f64`.
///
/// Everything that stores amplitudes or representation matrices is generic
/// over this trait; the crate root re-exports `f64` aliases for the common case.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + rustfft::FftNum
    + Default
    + Debug
    + Display
    + serde::Serialize
{
    /// Residual threshold used by the built-in numerical checks.
    fn check_tolerance() -> Self;

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("usize representable as float")
    }

    #[inline]
    fn from_f64_lossy(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 representable as float")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl Real for f32 {
    fn check_tolerance() -> Self {
        1e-4
    }
}

impl Real for f64 {
    fn check_tolerance() -> Self {
        1e-9
    }
}

/// `exp(2πi · num / den)` with the fraction reduced modulo `den` first so the
/// angle stays in `[0, 2π)`.
pub fn root_of_unity<T: Real>(num: u64, den: u64) -> Complex<T> {
    let r = num % den;
    let angle = T::TAU() * T::from_f64_lossy(r as f64) / T::from_f64_lossy(den as f64);
    Complex::from_polar(T::one(), angle)
}
