//! Global dynamics of the generalized Lyness recurrence
//! `x_{n+1} = (alpha + x_n) / x_{n-1}` on positive initial data, and the
//! frieze-pattern calculus it sprang from.
//!
//! What the crate covers:
//!
//! - **Exact cycles** ([`map`], [`exact`]): the unfolded planar map
//!   `f(x, y) = (y, (alpha + y)/x)`, its inverse and Jacobian, and bit-exact
//!   rational iteration proving global periodicity at the three special
//!   parameters (period 5 at `alpha = 1`, period 6 at `alpha = 0`, period 4
//!   for the normalized infinite-alpha map).
//! - **The invariant** ([`invariant`]): the conserved quantity
//!   `V(x, y) = (x+1)(y+1)(x+y+alpha)/(xy)`, its bowl geometry (unique
//!   minimum at `F = (omega, omega)`), diagonal crossings and the projected
//!   interval of each level curve, and the five exceptional levels of the
//!   completed cubic.
//! - **Rotation numbers** ([`rotation`]): a winding estimator for the
//!   rotation number of `f` on each level curve, the linearization limit
//!   `arccos(1/(2 omega))/(2 pi)`, the large-level asymptote
//!   `ln v / (5 ln v - ln alpha)`, the open bounds `(1/6, 1/5)` and
//!   `(1/5, 1/4)`, and grid scans probing Beukers-Cushman monotonicity.
//! - **Periodic orbits** ([`periodic`]): the set of achievable periods
//!   (9, 11, 13, 14, 16, 17, 19 and every n >= 21 except 42), the critical
//!   parameters `alpha_9`, `alpha_11`, and the closed-form levels carrying
//!   exact period-9/11 orbits, verified by forward iteration.
//! - **Frieze patterns** ([`frieze`]): building patterns from a diagonal,
//!   the unimodular rule, glide symmetry, quiddity rows and continuants,
//!   the all-integer criterion, and verification of staggered grids.
//!
//! Each capability has a runnable demo under `examples/`; the thin `lyness`
//! binary exposes the same operations as subcommands emitting tables, CSV,
//! or JSON.

pub mod error;
pub mod exact;
pub mod frieze;
pub mod invariant;
pub mod map;
pub mod periodic;
pub mod report;
mod roots;
pub mod rotation;

pub use error::{Error, Result};
pub use exact::{ExactPoint, ExactRational, DEFAULT_EXACT_BIT_CAP};
pub use invariant::{
    exceptional_levels, gradient_v, hessian_min_check, interval_bounds, invariant_v,
    diagonal_roots, ExceptionalLevels, LevelCurve, LevelValue, ProjectedInterval,
};
pub use map::{normalized_infinite_alpha_step, LynessParams, OrbitRecord, Point2};
pub use periodic::{
    critical_alpha, period_set, special_level, tangency_residual, verify_closure, ClosureReport,
    PeriodWitness, SpecialLevel, SpecialPeriod,
};
pub use rotation::{
    estimate_rotation, estimate_rotation_with, log_spaced_levels, rho_asymptotic, rho_bounds,
    rho_limit_at_minimum, scan_rho, MonotonicityReport, RhoScan, RotationEstimate,
    RotationOptions, SeedChoice, Trend,
};
