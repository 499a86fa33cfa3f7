//! Floating-point scalar abstraction: f32 for training, f64 for the
//! simulator and for gradient checking.

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating point scalar the math and tensor code is generic over.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Default + Send + Sync + std::fmt::Debug + std::fmt::Display + 'static
{
    fn from_f64(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("finite f64 converts")
    }

    fn to_f64(self) -> f64 {
        <Self as ToPrimitive>::to_f64(&self).expect("scalar converts to f64")
    }

    fn from_usize_(v: usize) -> Self {
        Self::from_f64(v as f64)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
