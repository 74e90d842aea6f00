//! Scalar abstraction for the contest math.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar used throughout the solvers.
///
/// Everything the cutoff formulas need: `exp`, `ln`, `sqrt`, `exp_m1`,
/// `ln_1p` come from [`Float`]; `of` lifts `f64` literals into the generic
/// type. `f64` and `f32` both satisfy the bound.
pub trait Real: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lift an `f64` literal. Panics only if the target type cannot represent
    /// any finite `f64`, which none of the supported scalars do.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 literal must convert")
    }

    #[inline]
    fn half() -> Self {
        Self::of(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::of(2.0)
    }

    /// `1 - e^{-x}` computed without cancellation for small `x`.
    #[inline]
    fn one_m_exp_neg(x: Self) -> Self {
        -(-x).exp_m1()
    }
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_lift_roundtrips() {
        assert_eq!(f64::of(0.25), 0.25);
        assert_eq!(f32::of(0.25), 0.25f32);
    }

    #[test]
    fn one_m_exp_neg_matches_naive_form() {
        for &x in &[1e-12, 1e-6, 0.1, 1.0, 30.0] {
            let exact = f64::one_m_exp_neg(x);
            let naive = 1.0 - (-x as f64).exp();
            assert!((exact - naive).abs() <= 1e-15 * exact.max(1e-300));
        }
    }
}
