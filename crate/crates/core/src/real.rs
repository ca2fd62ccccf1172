//! Scalar abstraction for the model's floating-point state.
//!
//! All count statistics are integral; everything else (weights, augmented
//! variables, topic estimates) is generic over [`Real`] so the same code
//! runs in `f32` or `f64`. The trait also routes the primitive random
//! draws the samplers need, so generic code never has to spell out
//! `Distribution` bounds.

use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma, Open01, StandardNormal};

/// Floating-point scalar usable for model state: `f32` or `f64`.
pub trait Real:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + core::ops::AddAssign
    + core::ops::SubAssign
    + core::ops::MulAssign
    + core::ops::DivAssign
    + core::iter::Sum
    + core::fmt::Debug
    + core::fmt::Display
    + serde::Serialize
    + serde::de::DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64`; used for constants and tolerances.
    fn of(x: f64) -> Self;

    /// Widening (for `f32`) or identity (for `f64`) conversion.
    fn f64(self) -> f64;

    /// One draw from the standard normal distribution.
    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One draw from the open interval (0, 1).
    fn unit_open<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One draw from the unit-rate exponential distribution.
    fn exp1<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One draw from Gamma(shape, 1).
    fn gamma<R: Rng + ?Sized>(shape: Self, rng: &mut R) -> Self;
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Real for $t {
            #[inline]
            fn of(x: f64) -> Self {
                x as $t
            }

            #[inline]
            fn f64(self) -> f64 {
                self as f64
            }

            #[inline]
            fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                StandardNormal.sample(rng)
            }

            #[inline]
            fn unit_open<R: Rng + ?Sized>(rng: &mut R) -> Self {
                Open01.sample(rng)
            }

            #[inline]
            fn exp1<R: Rng + ?Sized>(rng: &mut R) -> Self {
                Exp1.sample(rng)
            }

            #[inline]
            fn gamma<R: Rng + ?Sized>(shape: Self, rng: &mut R) -> Self {
                Gamma::new(shape, 1.0).expect("positive gamma shape").sample(rng)
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samplers::rng_from_seed;

    #[test]
    fn conversions_round_trip() {
        assert_eq!(f64::of(0.25).f64(), 0.25);
        assert_eq!(f32::of(0.25), 0.25f32);
    }

    #[test]
    fn draws_are_finite_and_in_range() {
        let mut rng = rng_from_seed(7);
        for _ in 0..1000 {
            let u = f64::unit_open(&mut rng);
            assert!(u > 0.0 && u < 1.0);
            assert!(f64::std_normal(&mut rng).is_finite());
            assert!(f64::exp1(&mut rng) > 0.0);
            assert!(f64::gamma(2.5, &mut rng) > 0.0);
        }
    }
}
