//! Rotation numbers of the map restricted to level curves.
//!
//! On each closed level curve the map is conjugate to a rigid rotation, and
//! the curves are star-shaped about the fixed point, so the rotation number
//! is estimated by accumulating the winding angle of `f^n(P) - F` with a
//! per-step unwrap into `(0, 2 pi)` (the map advances clockwise by less than
//! a full turn per step). The estimate carries the conservative a-posteriori
//! error bound `1 / n_iters`.
//!
//! Closed forms checked against the estimator:
//! - limit at the minimum level: `rho_alpha = arccos(1 / (2 omega)) / (2 pi)`,
//! - large-level asymptote: `rho ~ ln v / (5 ln v - ln alpha)`,
//! - the open bounds `(1/6, 1/5)` for `alpha < 1` and `(1/5, 1/4)` for
//!   `alpha > 1`, plus the Beukers-Cushman strict monotonicity in `v`.

use rayon::prelude::*;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::invariant::{invariant_v, LevelCurve};
use crate::map::{LynessParams, Point2};

/// Smallest iteration count the estimator accepts.
pub const MIN_ROTATION_ITERS: u64 = 1_000;

/// Where to start the orbit used for estimation.
#[derive(Clone, Copy, Debug)]
pub enum SeedChoice {
    /// The far diagonal crossing of the level curve (default).
    DiagonalFar,
    /// A caller-supplied point; its own level `V(p)` is used and recorded.
    Explicit(Point2),
}

/// Optional estimator behavior.
#[derive(Clone, Copy, Debug, Default)]
pub struct RotationOptions {
    /// Snap the estimate to the nearest angular return: divide the winding
    /// at the iterate minimizing |angular residual| / j instead of at the
    /// final step. Such j land on continued-fraction denominators of rho,
    /// which cancels most of the O(1/N) phase error. Off by default; the
    /// plain average meets the stated tolerances.
    pub refine: bool,
}

/// A rotation-number estimate on one level curve.
#[derive(Clone, Copy, Debug)]
pub struct RotationEstimate {
    pub rho: f64,
    pub iterations: u64,
    /// Conservative a-posteriori bound: one full turn spread over the run,
    /// i.e. `1 / iterations`.
    pub stderr_bound: f64,
    pub alpha: f64,
    pub v: f64,
}

/// Estimate the rotation number on the level curve `V = v`.
pub fn estimate_rotation(
    params: &LynessParams,
    v: f64,
    n_iters: u64,
    seed: SeedChoice,
) -> Result<RotationEstimate> {
    estimate_rotation_with(params, v, n_iters, seed, RotationOptions::default())
}

pub fn estimate_rotation_with(
    params: &LynessParams,
    v: f64,
    n_iters: u64,
    seed: SeedChoice,
    options: RotationOptions,
) -> Result<RotationEstimate> {
    if n_iters < MIN_ROTATION_ITERS {
        return Err(Error::TooFewIterations {
            got: n_iters,
            min: MIN_ROTATION_ITERS,
        });
    }
    let (start, v_used) = match seed {
        SeedChoice::DiagonalFar => {
            let curve = LevelCurve::new(*params, v)?;
            if curve.diag_far() == curve.diag_near() {
                // Degenerate curve: the fixed point has no rotation orbit.
                return Err(Error::BelowMinimumLevel { v, v_min: params.v_min() });
            }
            (curve.diag_far_point(), v)
        }
        SeedChoice::Explicit(p) => {
            let vp = invariant_v(p, params);
            if vp <= params.v_min() * (1.0 + 1e-12) {
                return Err(Error::BelowMinimumLevel { v: vp, v_min: params.v_min() });
            }
            (p, vp)
        }
    };

    let omega = params.omega();
    let alpha = params.alpha();
    let (mut x, mut y) = (start.x(), start.y());
    let theta0 = (y - omega).atan2(x - omega);
    let mut theta_prev = theta0;
    let mut winding = 0.0f64;

    // Nearest-return bookkeeping for the refined estimate.
    let mut best: Option<(u64, f64, f64)> = None; // (j, winding_j, |residual|/j)

    for j in 1..=n_iters {
        let next_y = (alpha + y) / x;
        x = y;
        y = next_y;
        let (dx, dy) = (x - omega, y - omega);
        if dx == 0.0 && dy == 0.0 {
            return Err(Error::HitFixedPoint);
        }
        let theta = dy.atan2(dx);
        // Clockwise advance, unwrapped into [0, 2 pi).
        winding += (theta_prev - theta).rem_euclid(TAU);
        theta_prev = theta;

        if options.refine {
            let mut resid = (theta0 - theta).rem_euclid(TAU);
            if resid > PI {
                resid -= TAU;
            }
            let score = resid.abs() / j as f64;
            if best.is_none_or(|(_, _, s)| score < s) {
                best = Some((j, winding, score));
            }
        }
    }

    let mut rho = winding / (TAU * n_iters as f64);
    if options.refine {
        if let Some((j, winding_j, _)) = best {
            // The winding accumulated up to the nearest return is an almost
            // integer number of turns; dividing there cancels the fractional
            // arc that the plain average smears over the whole run.
            rho = winding_j / (TAU * j as f64);
        }
    }

    Ok(RotationEstimate {
        rho,
        iterations: n_iters,
        stderr_bound: 1.0 / n_iters as f64,
        alpha: params.alpha(),
        v: v_used,
    })
}

/// Closed-form limit of the rotation number as `v -> v_alpha`:
/// `arccos(1 / (1 + sqrt(1 + 4 alpha))) / (2 pi)`, the rotation number of
/// the linearization at the fixed point.
pub fn rho_limit_at_minimum(params: &LynessParams) -> f64 {
    (1.0 / (2.0 * params.omega())).acos() / TAU
}

/// Large-level approximation `rho ~ ln v / (5 ln v - ln alpha)`, exact
/// (identically 1/5) at `alpha = 1`. Requires `alpha > 0` and
/// `v > max(v_alpha, 1)`.
pub fn rho_asymptotic(params: &LynessParams, v: f64) -> Result<f64> {
    let alpha = params.alpha();
    if alpha <= 0.0 {
        return Err(Error::InvalidAlpha { alpha });
    }
    if v <= params.v_min().max(1.0) {
        return Err(Error::BelowMinimumLevel { v, v_min: params.v_min().max(1.0) });
    }
    if alpha == 1.0 {
        // ln(alpha) = 0; return the exact value rather than ln v / (5 ln v).
        return Ok(0.2);
    }
    Ok(v.ln() / (5.0 * v.ln() - alpha.ln()))
}

/// The open interval that contains every rotation number for this `alpha`:
/// `(1/6, 1/5)` when `0 < alpha < 1`, `(1/5, 1/4)` when `alpha > 1`.
/// `alpha` in `{0, 1}` is rejected: there the rotation number is constant.
pub fn rho_bounds(params: &LynessParams) -> Result<(f64, f64)> {
    let alpha = params.alpha();
    if alpha == 0.0 || alpha == 1.0 {
        return Err(Error::ExcludedAlpha { alpha });
    }
    Ok(if alpha < 1.0 {
        (1.0 / 6.0, 0.2)
    } else {
        (0.2, 0.25)
    })
}

/// Expected trend of `v -> rho` for a given `alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trend {
    Increasing,
    Decreasing,
    Constant,
}

impl Trend {
    pub fn for_alpha(alpha: f64) -> Trend {
        if alpha == 0.0 || alpha == 1.0 {
            Trend::Constant
        } else if alpha < 1.0 {
            Trend::Increasing
        } else {
            Trend::Decreasing
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairVerdict {
    /// Difference exceeds the combined error bounds in the expected direction.
    Consistent,
    /// Difference is within the combined error bounds; no verdict.
    Indistinguishable,
    /// Difference exceeds the combined error bounds against the trend.
    Violation,
}

/// Adjacent-difference monotonicity report for a scan.
#[derive(Clone, Debug)]
pub struct MonotonicityReport {
    pub expected: Trend,
    /// One verdict per adjacent grid pair, in grid order.
    pub verdicts: Vec<PairVerdict>,
    pub violations: usize,
    pub indistinguishable: usize,
}

impl MonotonicityReport {
    fn from_estimates(expected: Trend, estimates: &[RotationEstimate]) -> Self {
        let mut verdicts = Vec::with_capacity(estimates.len().saturating_sub(1));
        for pair in estimates.windows(2) {
            let delta = pair[1].rho - pair[0].rho;
            let margin = pair[0].stderr_bound + pair[1].stderr_bound;
            let verdict = if delta.abs() <= margin {
                match expected {
                    Trend::Constant => PairVerdict::Consistent,
                    _ => PairVerdict::Indistinguishable,
                }
            } else {
                let ok = match expected {
                    Trend::Increasing => delta > 0.0,
                    Trend::Decreasing => delta < 0.0,
                    Trend::Constant => false,
                };
                if ok {
                    PairVerdict::Consistent
                } else {
                    PairVerdict::Violation
                }
            };
            verdicts.push(verdict);
        }
        let violations = verdicts.iter().filter(|v| **v == PairVerdict::Violation).count();
        let indistinguishable = verdicts
            .iter()
            .filter(|v| **v == PairVerdict::Indistinguishable)
            .count();
        MonotonicityReport {
            expected,
            verdicts,
            violations,
            indistinguishable,
        }
    }

    /// True when every adjacent pair moved in the expected direction by more
    /// than the combined error bounds.
    pub fn strictly_monotone(&self) -> bool {
        self.violations == 0
            && self.indistinguishable == 0
            && self.expected != Trend::Constant
    }
}

/// A scan of rotation estimates over an increasing grid of levels.
#[derive(Clone, Debug)]
pub struct RhoScan {
    pub estimates: Vec<RotationEstimate>,
    pub report: MonotonicityReport,
}

/// Estimate the rotation number on every level of `v_grid` (in parallel),
/// then compare adjacent estimates against the expected trend.
pub fn scan_rho(params: &LynessParams, v_grid: &[f64], n_iters: u64) -> Result<RhoScan> {
    if v_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnorderedGrid);
    }
    let estimates: Vec<RotationEstimate> = v_grid
        .par_iter()
        .map(|&v| estimate_rotation(params, v, n_iters, SeedChoice::DiagonalFar))
        .collect::<Result<_>>()?;
    let report = MonotonicityReport::from_estimates(Trend::for_alpha(params.alpha()), &estimates);
    Ok(RhoScan { estimates, report })
}

/// Geometrically spaced level grid from `v_min * lo_mult` to `v_max`.
pub fn log_spaced_levels(params: &LynessParams, lo_mult: f64, v_max: f64, steps: usize) -> Vec<f64> {
    let lo = (params.v_min() * lo_mult).ln();
    let hi = v_max.ln();
    (0..steps)
        .map(|i| {
            let t = if steps == 1 { 0.0 } else { i as f64 / (steps - 1) as f64 };
            (lo + t * (hi - lo)).exp()
        })
        .collect()
}

/// Best rational approximation `p/q` to `x` with `q <= max_den`, from the
/// continued-fraction convergents.
pub fn best_rational_approx(x: f64, max_den: u64) -> (u64, u64) {
    // (p0/q0, p1/q1) are the two most recent convergents.
    let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 0u64);
    let mut frac = x.abs();
    loop {
        let a = frac.floor();
        if !(0.0..=u64::MAX as f64).contains(&a) {
            break;
        }
        let a = a as u64;
        let p2 = match a.checked_mul(p1).and_then(|m| m.checked_add(p0)) {
            Some(p2) => p2,
            None => break,
        };
        let q2 = match a.checked_mul(q1).and_then(|m| m.checked_add(q0)) {
            Some(q2) => q2,
            None => break,
        };
        if q2 > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let rem = frac - a as f64;
        if rem < 1e-15 {
            break;
        }
        frac = 1.0 / rem;
    }
    (p1, q1.max(1))
}
