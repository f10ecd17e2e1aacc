//! The planar Lyness map `f(x, y) = (y, (alpha + y) / x)`, its inverse,
//! its Jacobian at the fixed point, and orbit iteration.
//!
//! The recurrence `x_{n+1} = (alpha + x_n) / x_{n-1}` unfolds into `f` on the
//! open positive quadrant; the scalar sequence is the x-projection of the
//! planar orbit. The case `alpha = infinity` is handled by a separate
//! normalized map (see [`normalized_infinite_alpha_step`]) obtained through
//! the substitution `x_n = sqrt(alpha) * y_n`, so infinities never enter
//! [`LynessParams`].

use crate::error::{Error, Result};

/// A point of the open positive quadrant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point2 {
    x: f64,
    y: f64,
}

impl Point2 {
    /// Both coordinates must be finite and strictly positive.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && x > 0.0 && y > 0.0 {
            Ok(Point2 { x, y })
        } else {
            Err(Error::OutsideDomain { x, y })
        }
    }

    pub(crate) fn new_unchecked(x: f64, y: f64) -> Self {
        debug_assert!(x > 0.0 && y > 0.0, "({x}, {y}) left the positive quadrant");
        Point2 { x, y }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// Euclidean distance to another point.
    pub fn distance(&self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Euclidean norm of the coordinate vector.
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

impl std::fmt::Display for Point2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The parameter `alpha >= 0` together with its derived constants:
/// `omega = (1 + sqrt(1 + 4 alpha)) / 2`, the fixed point `F = (omega, omega)`
/// and the minimum invariant level `v_alpha = (omega + 1)^3 / omega`.
#[derive(Clone, Copy, Debug)]
pub struct LynessParams {
    alpha: f64,
    omega: f64,
    v_min: f64,
    fixed_point: Point2,
}

impl LynessParams {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::InvalidAlpha { alpha });
        }
        let omega = (1.0 + (1.0 + 4.0 * alpha).sqrt()) / 2.0;
        let v_min = (omega + 1.0).powi(3) / omega;
        Ok(LynessParams {
            alpha,
            omega,
            v_min,
            fixed_point: Point2::new_unchecked(omega, omega),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The positive root of `omega^2 - omega - alpha = 0`.
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Minimum of the invariant: `v_alpha = V(F)`.
    pub fn v_min(&self) -> f64 {
        self.v_min
    }

    pub fn fixed_point(&self) -> Point2 {
        self.fixed_point
    }

    /// One application of `f(x, y) = (y, (alpha + y) / x)`.
    pub fn step(&self, p: Point2) -> Point2 {
        Point2::new_unchecked(p.y, (self.alpha + p.y) / p.x)
    }

    /// The inverse map: solve `f(q) = p` for `q = ((alpha + x) / y, x)`.
    pub fn inverse_step(&self, p: Point2) -> Point2 {
        Point2::new_unchecked((self.alpha + p.x) / p.y, p.x)
    }

    /// Record the orbit `seed, f(seed), ..., f^n(seed)`.
    pub fn iterate(&self, seed: Point2, n: usize) -> OrbitRecord {
        let mut iterates = Vec::with_capacity(n + 1);
        iterates.push(seed);
        let mut p = seed;
        for _ in 0..n {
            p = self.step(p);
            iterates.push(p);
        }
        OrbitRecord {
            seed,
            alpha: self.alpha,
            iterates,
        }
    }

    /// Derivative of `f` at the fixed point: `[[0, 1], [-1, 1/omega]]`.
    /// Its eigenvalues are `exp(+-i theta)` with `cos theta = 1 / (2 omega)`.
    pub fn jacobian_at_fixed_point(&self) -> [[f64; 2]; 2] {
        [[0.0, 1.0], [-1.0, 1.0 / self.omega]]
    }
}

/// The normalized `alpha = infinity` map `(x, y) -> (y, 1/x)`, i.e. the
/// recurrence `y_{n+1} = 1 / y_{n-1}` reached through `x_n = sqrt(alpha) y_n`.
/// Every orbit is a 4-cycle.
pub fn normalized_infinite_alpha_step(p: Point2) -> Point2 {
    Point2::new_unchecked(p.y, 1.0 / p.x)
}

/// A finite stretch of an orbit, `iterates[k+1] = f(iterates[k])`.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    pub seed: Point2,
    pub alpha: f64,
    pub iterates: Vec<Point2>,
}

impl OrbitRecord {
    /// The scalar solution of the recurrence: x-coordinates of the orbit.
    pub fn x_projection(&self) -> Vec<f64> {
        self.iterates.iter().map(|p| p.x()).collect()
    }

    pub fn len(&self) -> usize {
        self.iterates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.iterates.is_empty()
    }
}
