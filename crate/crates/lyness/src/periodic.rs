//! Classification of achievable orbit periods and the exact period-9/11
//! level curves.
//!
//! A period `q` is achievable (for some `alpha` outside `{0, 1, infinity}`)
//! exactly when a coprime `p` exists with `1/6 < p/q < 1/4` and
//! `p/q != 1/5`; the fraction `1/5` is excluded because the rotation number
//! ranges over the open interval between `rho_alpha` and `1/5`. Periods 9
//! and 11 additionally admit closed-form levels `v_bar` on which every orbit
//! closes exactly, entered through the critical parameters `alpha_9` and
//! `alpha_11`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::invariant::diagonal_roots;
use crate::map::{LynessParams, Point2};

/// All admissible rotation numerators for one candidate period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodWitness {
    pub q: u32,
    /// Coprime numerators `p` with `q/6 < p < q/4` (and `p/q != 1/5`),
    /// in increasing order. Empty when the period is not achievable.
    pub p_list: Vec<u32>,
}

impl PeriodWitness {
    pub fn is_achievable(&self) -> bool {
        !self.p_list.is_empty()
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Enumerate witnesses for every `q` in `1..=q_max`.
pub fn period_set(q_max: u32) -> Vec<PeriodWitness> {
    (1..=q_max)
        .map(|q| {
            let p_list = (q / 6 + 1..=q.saturating_sub(1) / 4)
                .filter(|&p| gcd(p, q) == 1)
                .filter(|&p| 5 * p != q)
                .collect();
            PeriodWitness { q, p_list }
        })
        .collect()
}

/// Periods with closed-form level curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialPeriod {
    Nine,
    Eleven,
}

impl SpecialPeriod {
    pub fn value(self) -> u32 {
        match self {
            SpecialPeriod::Nine => 9,
            SpecialPeriod::Eleven => 11,
        }
    }
}

impl TryFrom<u32> for SpecialPeriod {
    type Error = Error;
    fn try_from(period: u32) -> Result<Self> {
        match period {
            9 => Ok(SpecialPeriod::Nine),
            11 => Ok(SpecialPeriod::Eleven),
            _ => Err(Error::UnsupportedPeriod { period }),
        }
    }
}

/// The critical parameter at which the period first becomes achievable:
/// `alpha_q = (1 - 2 cos(4 pi / q)) / (4 cos^2(4 pi / q))`, i.e. the alpha
/// whose linearization rotation number equals `2/q`.
pub fn critical_alpha(period: SpecialPeriod) -> f64 {
    let c = (4.0 * PI / period.value() as f64).cos();
    (1.0 - 2.0 * c) / (4.0 * c * c)
}

/// A candidate level curve on which all orbits have the given period.
#[derive(Clone, Copy, Debug)]
pub struct SpecialLevel {
    pub period: SpecialPeriod,
    pub alpha: f64,
    /// The closed-form level `v_bar`.
    pub v_bar: f64,
    /// Far diagonal root of the level curve, present when the level is valid.
    pub lambda_far: Option<f64>,
    /// True when `v_bar > v_alpha`, i.e. the curve exists. Equivalent to
    /// `alpha > alpha_9` (period 9) resp. `alpha < alpha_11` (period 11).
    pub valid: bool,
}

/// Evaluate the closed-form period-9/11 level at a given `alpha > 0`.
///
/// Period 9: `v_bar = (alpha - 1)(alpha^2 - alpha + 1) / alpha`.
/// Period 11: `v_bar = (1 - alpha)(1 - 2 alpha + sqrt(1 - 4 alpha^2 + 4 alpha^3)) / (2 alpha^2)`
/// (the positive square-root branch; the negative branch sits below
/// `v_alpha` for every `alpha`).
pub fn special_level(period: SpecialPeriod, alpha: f64) -> Result<SpecialLevel> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidAlpha { alpha });
    }
    let params = LynessParams::new(alpha)?;
    let v_bar = match period {
        SpecialPeriod::Nine => (alpha - 1.0) * (alpha * alpha - alpha + 1.0) / alpha,
        SpecialPeriod::Eleven => {
            let disc = 1.0 - 4.0 * alpha * alpha + 4.0 * alpha.powi(3);
            (1.0 - alpha) * (1.0 - 2.0 * alpha + disc.sqrt()) / (2.0 * alpha * alpha)
        }
    };
    let valid = v_bar > params.v_min();
    let lambda_far = if valid {
        Some(diagonal_roots(&params, v_bar)?.1)
    } else {
        None
    };
    Ok(SpecialLevel {
        period,
        alpha,
        v_bar,
        lambda_far,
        valid,
    })
}

/// Orbit-closure evidence for a special level.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub period: u32,
    pub seed: Point2,
    /// `|f^period(P) - P| / |P|`.
    pub closure_residual: f64,
    /// `|f^k(P) - P| / |P|` for `k = 1 .. period-1`.
    pub intermediate_residuals: Vec<f64>,
    /// Closure residual within tolerance.
    pub closed: bool,
    /// No intermediate residual dips below tolerance, so the period is
    /// principal (the orbit does not close early).
    pub principal: bool,
}

/// Iterate the forward map through one alleged period from the far diagonal
/// point and measure how exactly the orbit closes.
pub fn verify_closure(level: &SpecialLevel, tolerance: f64) -> Result<ClosureReport> {
    let lambda = level.lambda_far.ok_or(Error::InvalidSpecialLevel {
        v_bar: level.v_bar,
        v_min: LynessParams::new(level.alpha)?.v_min(),
    })?;
    let params = LynessParams::new(level.alpha)?;
    let seed = Point2::new(lambda, lambda)?;
    let period = level.period.value();
    let norm = seed.norm();
    let mut intermediate_residuals = Vec::with_capacity(period as usize - 1);
    let mut p = seed;
    for _ in 1..period {
        p = params.step(p);
        intermediate_residuals.push(p.distance(seed) / norm);
    }
    p = params.step(p);
    let closure_residual = p.distance(seed) / norm;
    Ok(ClosureReport {
        period,
        seed,
        closure_residual,
        closed: closure_residual <= tolerance,
        principal: intermediate_residuals.iter().all(|&r| r > tolerance),
        intermediate_residuals,
    })
}

/// `x^2 - y - alpha`: zero exactly on the horizontal-tangency locus of the
/// level curves. The symmetric period-q construction demands a vanishing
/// residual at `f^4(P)` (period 9) resp. `f^5(P)` (period 11).
pub fn tangency_residual(p: Point2, params: &LynessParams) -> f64 {
    p.x() * p.x() - p.y() - params.alpha()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariant::invariant_v;
    use crate::rotation::{estimate_rotation, SeedChoice};

    #[test]
    fn witness_spot_checks() {
        let got = period_set(60);
        assert_eq!(got.len(), 60);
        let row = |q: u32| got[q as usize - 1].p_list.clone();
        for q in [1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15, 18, 20, 42] {
            assert!(row(q).is_empty(), "q = {q} must be empty");
        }
        assert_eq!(row(9), vec![2]);
        assert_eq!(row(25), vec![6]);
        assert_eq!(row(29), vec![5, 6, 7]);
        assert_eq!(row(35), vec![6, 8]);
        assert_eq!(row(48), vec![11]);
        assert_eq!(row(57), vec![10, 11, 13, 14]);
        assert_eq!(row(60), vec![11, 13]);
    }

    #[test]
    fn every_large_period_is_achievable() {
        for w in period_set(500).iter().skip(60) {
            assert!(w.is_achievable(), "q = {} should be achievable", w.q);
        }
    }

    #[test]
    fn witness_fractions_lie_in_the_open_interval() {
        for w in period_set(500) {
            for &p in &w.p_list {
                let r = p as f64 / w.q as f64;
                assert!(r > 1.0 / 6.0 && r < 0.25 && r != 0.2);
                assert_eq!(gcd(p, w.q), 1);
            }
        }
    }

    #[test]
    fn critical_alphas_to_seven_significant_figures() {
        let a9 = critical_alpha(SpecialPeriod::Nine);
        let a11 = critical_alpha(SpecialPeriod::Eleven);
        assert!((a9 - 5.4114741).abs() < 5e-7);
        assert!((a11 - 0.2450749).abs() < 5e-8);
        assert!(matches!(SpecialPeriod::try_from(7), Err(Error::UnsupportedPeriod { .. })));
        // rho_alpha at alpha_9 is exactly 2/9 by construction.
        let p9 = LynessParams::new(a9).unwrap();
        assert!((crate::rotation::rho_limit_at_minimum(&p9) - 2.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn special_level_values() {
        // alpha = 6: v_bar = 5 * 31 / 6, valid since v_min = 64 / 3.
        let lvl = special_level(SpecialPeriod::Nine, 6.0).unwrap();
        assert!((lvl.v_bar - 155.0 / 6.0).abs() < 1e-12);
        assert!(lvl.valid && lvl.lambda_far.is_some());

        // At the critical alpha the level collapses onto the minimum.
        let a9 = critical_alpha(SpecialPeriod::Nine);
        let boundary = special_level(SpecialPeriod::Nine, a9).unwrap();
        let p = LynessParams::new(a9).unwrap();
        assert!((boundary.v_bar - p.v_min()).abs() < 1e-9 * p.v_min());

        let lvl11 = special_level(SpecialPeriod::Eleven, 0.2).unwrap();
        assert!((lvl11.v_bar - 15.338094023943839).abs() < 1e-9);
        assert!(lvl11.valid);

        assert!(special_level(SpecialPeriod::Nine, 0.0).is_err());
        assert!(special_level(SpecialPeriod::Nine, -1.0).is_err());
    }

    #[test]
    fn invalid_levels_have_no_far_root() {
        // Period 9 needs alpha > alpha_9; alpha = 1 gives v_bar = 0.
        let lvl = special_level(SpecialPeriod::Nine, 1.0).unwrap();
        assert!(!lvl.valid && lvl.lambda_far.is_none());
        assert!(verify_closure(&lvl, 1e-8).is_err());
        let lvl11 = special_level(SpecialPeriod::Eleven, 1.0).unwrap();
        assert!(!lvl11.valid);
    }

    #[test]
    fn validity_flips_at_the_critical_alpha() {
        for (period, a_crit) in [
            (SpecialPeriod::Nine, critical_alpha(SpecialPeriod::Nine)),
            (SpecialPeriod::Eleven, critical_alpha(SpecialPeriod::Eleven)),
        ] {
            let below = special_level(period, a_crit - 1e-4).unwrap();
            let above = special_level(period, a_crit + 1e-4).unwrap();
            match period {
                SpecialPeriod::Nine => {
                    assert!(!below.valid && above.valid);
                }
                SpecialPeriod::Eleven => {
                    assert!(below.valid && !above.valid);
                }
            }
        }
    }

    #[test]
    fn sign_flip_locates_the_critical_alpha() {
        // Bisect the sign of v_bar - v_alpha; the crossing must land on the
        // closed-form critical parameter to 1e-6.
        for (period, a_crit) in [
            (SpecialPeriod::Nine, critical_alpha(SpecialPeriod::Nine)),
            (SpecialPeriod::Eleven, critical_alpha(SpecialPeriod::Eleven)),
        ] {
            let margin = |alpha: f64| {
                let lvl = special_level(period, alpha).unwrap();
                lvl.v_bar - LynessParams::new(alpha).unwrap().v_min()
            };
            let (mut lo, mut hi) = (a_crit - 0.05, a_crit + 0.05);
            assert!(margin(lo) * margin(hi) < 0.0);
            let sign_lo = margin(lo) > 0.0;
            while hi - lo > 1e-9 {
                let mid = 0.5 * (lo + hi);
                if (margin(mid) > 0.0) == sign_lo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let found = 0.5 * (lo + hi);
            assert!(
                (found - a_crit).abs() < 1e-6,
                "period {}: crossing at {found}, closed form {a_crit}",
                period.value()
            );
        }
    }

    #[test]
    fn closure_and_tangency_for_period_nine() {
        let lvl = special_level(SpecialPeriod::Nine, 6.0).unwrap();
        let report = verify_closure(&lvl, 1e-8).unwrap();
        assert!(report.closed, "closure residual {}", report.closure_residual);
        assert!(report.principal);
        assert!(report.intermediate_residuals.iter().all(|&r| r > 0.01));

        // f^4(P) must land on the horizontal-tangency locus.
        let params = LynessParams::new(6.0).unwrap();
        let mut p = report.seed;
        for _ in 0..4 {
            p = params.step(p);
        }
        assert!(tangency_residual(p, &params).abs() < 1e-8);
        // The fixed point satisfies the same identity exactly.
        assert!(tangency_residual(params.fixed_point(), &params).abs() < 1e-12);
    }

    #[test]
    fn closure_and_tangency_for_period_eleven() {
        let lvl = special_level(SpecialPeriod::Eleven, 0.2).unwrap();
        let report = verify_closure(&lvl, 1e-8).unwrap();
        assert!(report.closed);
        assert!(report.principal);

        let params = LynessParams::new(0.2).unwrap();
        let mut p = report.seed;
        for _ in 0..5 {
            p = params.step(p);
        }
        assert!(tangency_residual(p, &params).abs() < 1e-8);
    }

    #[test]
    fn rotation_on_special_levels() {
        let lvl = special_level(SpecialPeriod::Nine, 6.0).unwrap();
        let params = LynessParams::new(6.0).unwrap();
        let est = estimate_rotation(&params, lvl.v_bar, 99_999, SeedChoice::DiagonalFar).unwrap();
        assert!((est.rho - 2.0 / 9.0).abs() < 1e-6);

        let lvl11 = special_level(SpecialPeriod::Eleven, 0.2).unwrap();
        let params11 = LynessParams::new(0.2).unwrap();
        let est11 =
            estimate_rotation(&params11, lvl11.v_bar, 99_990, SeedChoice::DiagonalFar).unwrap();
        assert!((est11.rho - 2.0 / 11.0).abs() < 1e-6);
    }

    #[test]
    fn symmetric_orbit_formulas_match_iteration() {
        // The first six projections of the symmetric period-9 orbit.
        let alpha = 6.0;
        let lvl = special_level(SpecialPeriod::Nine, alpha).unwrap();
        let l = lvl.lambda_far.unwrap();
        let params = LynessParams::new(alpha).unwrap();
        let orbit = params.iterate(Point2::new(l, l).unwrap(), 5);
        let xs = orbit.x_projection();
        let expect = [
            l,
            l,
            (l + alpha) / l,
            ((alpha + 1.0) * l + alpha) / (l * l),
            (alpha * l * l + (alpha + 1.0) * l + alpha) / (l * (l + alpha)),
            l * (2.0 * alpha * l * l + (alpha * alpha + alpha + 1.0) * l + alpha)
                / ((l + alpha) * ((alpha + 1.0) * l + alpha)),
        ];
        for (k, (got, want)) in xs.iter().skip(1).zip(expect.iter().skip(1)).enumerate() {
            assert!((got - want).abs() <= 1e-11 * want.abs(), "x_{k}");
        }
    }

    #[test]
    fn level_conservation_on_special_curve() {
        let lvl = special_level(SpecialPeriod::Nine, 6.0).unwrap();
        let params = LynessParams::new(6.0).unwrap();
        let l = lvl.lambda_far.unwrap();
        let v = invariant_v(Point2::new(l, l).unwrap(), &params);
        assert!((v - lvl.v_bar).abs() <= 1e-10 * lvl.v_bar);
    }
}
