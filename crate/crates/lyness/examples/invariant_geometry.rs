//! The conserved quantity V and its level-curve geometry: the bowl minimum,
//! diagonal crossings, the projected interval trapping the scalar sequence,
//! and the five exceptional levels.
//! Run with `cargo run --example invariant_geometry`.

use lyness::invariant::{
    exceptional_levels, gradient_v, hessian_min_check, invariant_v, LevelCurve,
};
use lyness::map::{LynessParams, Point2};

fn main() {
    let alpha = 2.0;
    let params = LynessParams::new(alpha).unwrap();
    println!("alpha = {alpha}: omega = {:.12}, v_alpha = {:.12}", params.omega(), params.v_min());

    let f = params.fixed_point();
    let (gx, gy) = gradient_v(f, &params);
    println!("gradient at the fixed point: ({gx:.2e}, {gy:.2e})");
    let hess = hessian_min_check(&params);
    println!(
        "Hessian determinant at F: {:.6} (strict minimum: {})\n",
        hess.determinant, hess.is_minimum
    );

    // Anatomy of one level curve.
    let v = 20.0;
    let curve = LevelCurve::new(params, v).unwrap();
    let interval = curve.projected_interval().unwrap();
    println!("level curve V = {v}:");
    println!("  diagonal crossings  {:.12} and {:.12}", curve.diag_near(), curve.diag_far());
    println!("  projected interval  [{:.12}, {:.12}]", interval.lo, interval.hi);

    // The orbit stays on the curve and inside the interval; its extremes
    // creep up to the interval endpoints.
    let mut p = curve.diag_far_point();
    let v0 = invariant_v(p, &params);
    let (mut min_x, mut max_x) = (f64::INFINITY, 0.0f64);
    let mut drift = 0.0f64;
    for _ in 0..200_000 {
        p = params.step(p);
        min_x = min_x.min(p.x());
        max_x = max_x.max(p.x());
        drift = drift.max(((invariant_v(p, &params) - v0) / v0).abs());
    }
    println!("  after 2e5 steps: x range [{min_x:.9}, {max_x:.9}], relative V drift {drift:.1e}\n");

    // V fills the quadrant: any point sits on exactly one level above v_alpha.
    for q in [Point2::new(0.1, 7.0).unwrap(), Point2::new(3.0, 0.25).unwrap()] {
        println!("V{q} = {:.9} (>= v_alpha)", invariant_v(q, &params));
    }

    let levels = exceptional_levels(&params).unwrap();
    println!("\nexceptional levels (all outside the dynamical range (v_alpha, inf)):");
    println!("  v = 0, v = infinity (cubic splits into lines)");
    println!("  v = alpha - 1             = {:.12}", levels.v_line_conic);
    println!("  v = v_alpha               = {:.12}", levels.v_min);
    println!("  v' (second critical point) = {:.12}", levels.v_prime);
}
