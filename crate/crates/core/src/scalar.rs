//! Scalar abstraction over the real floating-point type.
//!
//! All numerics in this crate are generic over [`Scalar`], so every pipeline
//! stage runs in either `f32` or `f64`. Concrete aliases for the common
//! `f64` instantiation live at the crate root.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Real scalar type the library is generic over: `f32` or `f64`.
pub trait Scalar: RealField + FromPrimitive + ToPrimitive + Copy {
    /// Draw one sample from the standard normal distribution N(0, 1).
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Scalar for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

impl Scalar for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

/// Convert an `f64` constant into the scalar type.
///
/// Panics if the value is not representable, which cannot happen for the
/// finite tolerances and coefficients used in this crate.
#[inline]
pub fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}
