//! Bracketed bisection.
//!
//! Every implicit cutoff in the model sits on a branch that is provably
//! monotone, so derivative-free bisection with a guaranteed bracket is the
//! whole story. The iteration runs until the midpoint is no longer strictly
//! inside the bracket (floating-point exhaustion), capped at [`MAX_ITER`];
//! residuals at the returned point are then limited only by the scalar's
//! precision.

use crate::error::{ChaseError, Result};
use crate::real::Real;

pub const MAX_ITER: usize = 200;

/// Root of `f` on `[lo, hi]`, requiring a sign change across the bracket.
///
/// Returns the midpoint of the final bracket. Exact zeros at either endpoint
/// are returned immediately.
pub fn bisect<R: Real>(mut lo: R, mut hi: R, f: impl Fn(R) -> R, what: &str) -> Result<R> {
    if !(lo < hi) {
        return Err(ChaseError::Bracket(format!(
            "{what}: empty bracket [{lo}, {hi}]"
        )));
    }
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == R::zero() {
        return Ok(lo);
    }
    if fhi == R::zero() {
        return Ok(hi);
    }
    if flo * fhi > R::zero() {
        return Err(ChaseError::Bracket(format!(
            "{what}: no sign change on [{lo}, {hi}] (f(lo)={flo}, f(hi)={fhi})"
        )));
    }
    for _ in 0..MAX_ITER {
        let mid = (lo + hi) * R::half();
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == R::zero() {
            return Ok(mid);
        }
        if fm * flo > R::zero() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) * R::half())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two_to_machine_precision() {
        let r = bisect(1.0f64, 2.0, |x| x * x - 2.0, "sqrt2").unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn rejects_bracket_without_sign_change() {
        let e = bisect(1.0f64, 2.0, |x| x * x + 1.0, "none").unwrap_err();
        assert!(matches!(e, ChaseError::Bracket(_)));
    }

    #[test]
    fn endpoint_zero_is_returned() {
        let r = bisect(0.0f64, 1.0, |x| x, "origin").unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn works_in_f32() {
        let r = bisect(1.0f32, 2.0, |x| x * x - 2.0, "sqrt2").unwrap();
        assert!((r - std::f32::consts::SQRT_2).abs() < 1e-6);
    }
}
