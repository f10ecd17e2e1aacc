//! The conserved quantity `V(x, y) = (x + 1)(y + 1)(x + y + alpha) / (x y)`
//! and the geometry of its level sets.
//!
//! `V` is constant along orbits, has a single nondegenerate minimum at the
//! fixed point `F = (omega, omega)`, blows up at the boundary of the
//! quadrant, and for every `v > v_alpha` the level set `C_v` is a closed
//! curve around `F`. This module finds where `C_v` meets the diagonal,
//! computes the horizontal extent of the curve (the interval that traps the
//! projected scalar sequence), and lists the five exceptional levels at
//! which the completed cubic degenerates.

use crate::error::{Error, Result};
use crate::map::{LynessParams, Point2};
use crate::roots::bisect_then_newton;

/// Degenerate-level tolerance: `v` within this relative distance of
/// `v_alpha` is treated as the level of the fixed point itself.
const LEVEL_TOL: f64 = 1e-12;

/// The invariant `V` at a point.
pub fn invariant_v(p: Point2, params: &LynessParams) -> f64 {
    let (x, y) = (p.x(), p.y());
    (x + 1.0) * (y + 1.0) * (x + y + params.alpha()) / (x * y)
}

/// Closed-form gradient of `V`:
/// `dV/dx = (y + 1)(x^2 - y - alpha) / (x^2 y)` and symmetrically in `y`.
pub fn gradient_v(p: Point2, params: &LynessParams) -> (f64, f64) {
    let (x, y) = (p.x(), p.y());
    let a = params.alpha();
    let gx = (y + 1.0) * (x * x - y - a) / (x * x * y);
    let gy = (x + 1.0) * (y * y - x - a) / (x * y * y);
    (gx, gy)
}

/// Outcome of the second-derivative test at the fixed point.
#[derive(Clone, Copy, Debug)]
pub struct HessianCheck {
    /// `det H(V)|_F = ((omega + 1)^2 / omega^4) (4 - 1 / omega^2)`.
    pub determinant: f64,
    /// True when the determinant is positive, i.e. `F` is a strict minimum.
    pub is_minimum: bool,
}

/// Evaluate the Hessian determinant of `V` at the fixed point.
pub fn hessian_min_check(params: &LynessParams) -> HessianCheck {
    let om = params.omega();
    let determinant = (om + 1.0).powi(2) / om.powi(4) * (4.0 - 1.0 / (om * om));
    HessianCheck {
        determinant,
        is_minimum: determinant > 0.0,
    }
}

/// Restriction of `V` to the diagonal: `V(l, l) = (l + 1)^2 (2l + alpha) / l^2`.
pub fn diagonal_invariant(lambda: f64, alpha: f64) -> f64 {
    (lambda + 1.0).powi(2) * (2.0 * lambda + alpha) / (lambda * lambda)
}

fn diagonal_invariant_derivative(lambda: f64, alpha: f64) -> f64 {
    let u = (lambda + 1.0).powi(2) * (2.0 * lambda + alpha);
    let du = 2.0 * (lambda + 1.0) * (2.0 * lambda + alpha) + 2.0 * (lambda + 1.0).powi(2);
    du / (lambda * lambda) - 2.0 * u / lambda.powi(3)
}

/// The two crossings of the level curve `V = v` with the diagonal:
/// the near root in `(0, omega)` and the far root in `(omega, inf)`.
/// At `v = v_alpha` (within tolerance) both collapse to `omega`.
pub fn diagonal_roots(params: &LynessParams, v: f64) -> Result<(f64, f64)> {
    let v_min = params.v_min();
    let omega = params.omega();
    if v <= v_min * (1.0 + LEVEL_TOL) {
        if v >= v_min * (1.0 - LEVEL_TOL) {
            return Ok((omega, omega));
        }
        return Err(Error::BelowMinimumLevel { v, v_min });
    }
    let alpha = params.alpha();
    let f = |l: f64| diagonal_invariant(l, alpha) - v;
    let df = |l: f64| diagonal_invariant_derivative(l, alpha);

    // V(l, l) decreases on (0, omega] and increases on [omega, inf),
    // diverging at both ends, so each side brackets exactly one root.
    let mut lo = omega / 2.0;
    while f(lo) <= 0.0 {
        lo /= 2.0;
    }
    let near = bisect_then_newton(f, df, lo, omega)?;

    let mut hi = (2.0 * omega).max(v);
    while f(hi) <= 0.0 {
        hi *= 2.0;
    }
    let far = bisect_then_newton(f, df, omega, hi)?;
    Ok((near, far))
}

/// The projection of a level curve onto the x-axis. The endpoints trap the
/// scalar solution: every term of the projected sequence lies in `[lo, hi]`,
/// and for dense (irrational-rotation) orbits the endpoints are the
/// infimum and supremum of the sequence.
#[derive(Clone, Copy, Debug)]
pub struct ProjectedInterval {
    pub lo: f64,
    pub hi: f64,
}

/// Value of `V` along the vertical-tangency locus `y^2 = x + alpha`:
/// `(x + 1)(1 + sqrt(x + alpha))^2 / x`.
pub fn tangency_invariant(x: f64, alpha: f64) -> f64 {
    let s = (x + alpha).sqrt();
    (x + 1.0) * (1.0 + s).powi(2) / x
}

fn tangency_invariant_derivative(x: f64, alpha: f64) -> f64 {
    let s = (x + alpha).sqrt();
    let g = (x + 1.0) * (1.0 + s).powi(2) / x;
    g * (1.0 / (x + 1.0) + 1.0 / (s * (1.0 + s)) - 1.0 / x)
}

/// Horizontal extent of the level curve `V = v`: the two solutions of
/// `(x + 1)(1 + sqrt(x + alpha))^2 / x = v`.
pub fn interval_bounds(params: &LynessParams, v: f64) -> Result<ProjectedInterval> {
    let v_min = params.v_min();
    let omega = params.omega();
    if v <= v_min * (1.0 + LEVEL_TOL) {
        if v >= v_min * (1.0 - LEVEL_TOL) {
            return Ok(ProjectedInterval { lo: omega, hi: omega });
        }
        return Err(Error::BelowMinimumLevel { v, v_min });
    }
    let alpha = params.alpha();
    let f = |x: f64| tangency_invariant(x, alpha) - v;
    let df = |x: f64| tangency_invariant_derivative(x, alpha);

    // The tangency invariant equals v_alpha at x = omega (there
    // sqrt(omega + alpha) = omega) and diverges at 0+ and at infinity.
    let mut lo_bracket = omega / 2.0;
    while f(lo_bracket) <= 0.0 {
        lo_bracket /= 2.0;
    }
    let lo = bisect_then_newton(f, df, lo_bracket, omega)?;

    let mut hi_bracket = (2.0 * omega).max(v);
    while f(hi_bracket) <= 0.0 {
        hi_bracket *= 2.0;
    }
    let hi = bisect_then_newton(f, df, omega, hi_bracket)?;
    Ok(ProjectedInterval { lo, hi })
}

/// A level curve `C_v` of the invariant, `v > v_alpha`, together with its
/// diagonal crossings.
#[derive(Clone, Copy, Debug)]
pub struct LevelCurve {
    params: LynessParams,
    v: f64,
    diag_near: f64,
    diag_far: f64,
}

impl LevelCurve {
    pub fn new(params: LynessParams, v: f64) -> Result<Self> {
        let (diag_near, diag_far) = diagonal_roots(&params, v)?;
        Ok(LevelCurve {
            params,
            v,
            diag_near,
            diag_far,
        })
    }

    /// The curve through a given point.
    pub fn through(params: LynessParams, p: Point2) -> Result<Self> {
        LevelCurve::new(params, invariant_v(p, &params))
    }

    pub fn params(&self) -> &LynessParams {
        &self.params
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    /// Diagonal crossing between the origin and the fixed point.
    pub fn diag_near(&self) -> f64 {
        self.diag_near
    }

    /// Diagonal crossing beyond the fixed point.
    pub fn diag_far(&self) -> f64 {
        self.diag_far
    }

    pub fn diag_near_point(&self) -> Point2 {
        Point2::new_unchecked(self.diag_near, self.diag_near)
    }

    pub fn diag_far_point(&self) -> Point2 {
        Point2::new_unchecked(self.diag_far, self.diag_far)
    }

    pub fn projected_interval(&self) -> Result<ProjectedInterval> {
        interval_bounds(&self.params, self.v)
    }
}

/// The five levels at which the projectively completed cubic fails to be
/// elliptic. All of them sit outside the dynamical range `(v_alpha, inf)`.
#[derive(Clone, Copy, Debug)]
pub struct ExceptionalLevels {
    /// `v = 0`: the cubic splits into three lines.
    pub v_zero: f64,
    /// `v = alpha - 1`: a line plus a conic.
    pub v_line_conic: f64,
    /// `v = v_alpha`: the curve degenerates to the fixed point.
    pub v_min: f64,
    /// `v' = v_alpha - (1 + 4 alpha)^{3/2} / alpha`, the level of the second
    /// (negative-quadrant) critical point `omega' = (1 - sqrt(1 + 4 alpha))/2`.
    pub v_prime: f64,
}

/// A level value that may be the point at infinity. Kept as a tagged variant
/// rather than an IEEE infinity so that comparisons stay total.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LevelValue {
    Finite(f64),
    Infinity,
}

impl ExceptionalLevels {
    /// All five members; infinity is the tagged marker.
    pub fn all(&self) -> [LevelValue; 5] {
        [
            LevelValue::Finite(self.v_zero),
            LevelValue::Infinity,
            LevelValue::Finite(self.v_line_conic),
            LevelValue::Finite(self.v_min),
            LevelValue::Finite(self.v_prime),
        ]
    }
}

/// Compute the exceptional levels for `alpha > 0`.
pub fn exceptional_levels(params: &LynessParams) -> Result<ExceptionalLevels> {
    let alpha = params.alpha();
    if alpha <= 0.0 {
        return Err(Error::InvalidAlpha { alpha });
    }
    let v_min = params.v_min();
    let levels = ExceptionalLevels {
        v_zero: 0.0,
        v_line_conic: alpha - 1.0,
        v_min,
        v_prime: v_min - (1.0 + 4.0 * alpha).powf(1.5) / alpha,
    };
    debug_assert!(levels.v_line_conic < levels.v_min);
    debug_assert!(levels.v_prime < levels.v_min);
    Ok(levels)
}
