//! Bracketed scalar root finding: bisection to a coarse interval, then a
//! Newton polish that falls back to bisection whenever a step would leave
//! the bracket. The callers below always supply brackets with a guaranteed
//! sign change (monotone sections of the invariant), so convergence is
//! unconditional.

use crate::error::{Error, Result};

const BISECT_REL_TOL: f64 = 1e-3;
const NEWTON_REL_TOL: f64 = 1e-12;
const MAX_ITERS: usize = 200;

/// Find the root of `f` in `[lo, hi]`, where `f(lo)` and `f(hi)` have
/// opposite signs. `df` is the derivative used by the Newton polish.
pub fn bisect_then_newton<F, D>(f: F, df: D, mut lo: f64, mut hi: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    debug_assert!(
        flo.signum() != fhi.signum(),
        "bracket [{lo}, {hi}] has no sign change"
    );

    // Coarse bisection.
    let mut iterations = 0;
    while hi - lo > BISECT_REL_TOL * lo.abs().max(1.0) {
        iterations += 1;
        if iterations > MAX_ITERS {
            return Err(Error::NoConvergence { iterations });
        }
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }

    // Newton polish, kept inside the bracket.
    let mut x = 0.5 * (lo + hi);
    for _ in 0..MAX_ITERS {
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
        } else {
            hi = x;
        }
        let d = df(x);
        let mut next = if d != 0.0 { x - fx / d } else { f64::NAN };
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= NEWTON_REL_TOL * x.abs().max(f64::MIN_POSITIVE) {
            return Ok(next);
        }
        x = next;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_square_root() {
        let root = bisect_then_newton(|x| x * x - 2.0, |x| 2.0 * x, 0.0, 2.0).unwrap();
        assert!((root - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn newton_fallback_survives_flat_derivative() {
        // Derivative vanishes at x = 0 inside the bracket.
        let root = bisect_then_newton(|x| x * x * x - 8.0, |x| 3.0 * x * x, -1.0, 5.0).unwrap();
        assert!((root - 2.0).abs() < 1e-11);
    }

    #[test]
    fn endpoint_roots_short_circuit() {
        let root = bisect_then_newton(|x| x - 1.0, |_| 1.0, 1.0, 3.0).unwrap();
        assert_eq!(root, 1.0);
    }
}
