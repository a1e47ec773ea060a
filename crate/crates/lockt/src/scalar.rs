//! Scalar abstraction: every numeric kernel in this crate is generic over a
//! floating-point type implementing [`Scalar`]. `f64` is the default used by
//! the training pipeline and the checkpoint format; `f32` is available for
//! memory-bound experiments.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps, ToPrimitive};

pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + std::iter::Sum
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Gauss error function (exact formulation, not the tanh approximation).
    fn erf(self) -> Self;

    /// Lossless-enough literal conversion for compile-time constants.
    fn from_f64_lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable in scalar type")
    }

    fn from_usize_lit(v: usize) -> Self {
        Self::from_usize(v).expect("usize representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }
}

impl Scalar for f64 {
    fn erf(self) -> Self {
        libm::erf(self)
    }
}

impl Scalar for f32 {
    fn erf(self) -> Self {
        libm::erff(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erf_reference_points() {
        assert!(f64::erf(0.0).abs() < 1e-15);
        // erf(1) = 0.8427007929497149 (Abramowitz & Stegun 7.1)
        assert!((f64::erf(1.0) - 0.842_700_792_949_714_9).abs() < 1e-15);
        assert!((f64::erf(-1.0) + 0.842_700_792_949_714_9).abs() < 1e-15);
        assert!((f64::erf(3.0) - 0.999_977_909_503_001_4).abs() < 1e-12);
    }

    #[test]
    fn erf_f32_matches_f64_coarsely() {
        for x in [-2.0f32, -0.5, 0.25, 1.5] {
            let wide = f64::erf(x as f64);
            assert!((f32::erf(x) as f64 - wide).abs() < 1e-6);
        }
    }
}
