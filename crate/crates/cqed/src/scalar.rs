//! Scalar abstraction: the crate's numerics are generic over `f32`/`f64`.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar the toolkit is generic over.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Lossy conversion from `f64` literals and intermediate constants.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant must convert into the scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// 2π as the working scalar.
pub fn tau<T: Real>() -> T {
    T::TAU()
}

/// Purely imaginary unit over `T`.
pub fn i<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

/// Complex zero over `T`.
pub fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// Real constant lifted into the complex plane.
pub fn cr<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}
