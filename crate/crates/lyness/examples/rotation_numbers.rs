//! Rotation numbers on level curves: winding estimates against the closed
//! forms, the open bounds, the linearization limit, the large-level
//! asymptote, and the monotonicity scan.
//! Run with `cargo run --example rotation_numbers --release`.

use lyness::map::LynessParams;
use lyness::rotation::{
    estimate_rotation, log_spaced_levels, rho_asymptotic, rho_bounds, rho_limit_at_minimum,
    scan_rho, SeedChoice, Trend,
};

fn main() {
    let n = 500_000;

    // At alpha = 1 and alpha = 0 every curve rotates by exactly 1/5 and 1/6.
    for (alpha, v, expect) in [(1.0, 12.0, 0.2), (1.0, 100.0, 0.2), (0.0, 9.0, 1.0 / 6.0)] {
        let params = LynessParams::new(alpha).unwrap();
        let est = estimate_rotation(&params, v, n, SeedChoice::DiagonalFar).unwrap();
        println!(
            "alpha = {alpha}, v = {v:>5}: rho = {:.8} (expect {expect:.8}, error bound {:.0e})",
            est.rho, est.stderr_bound
        );
    }
    println!();

    // Elsewhere the rotation number lives strictly inside (1/6, 1/5) or
    // (1/5, 1/4), tending to the linearization value at the bottom and to
    // 1/5 at infinity.
    for alpha in [0.5, 6.0] {
        let params = LynessParams::new(alpha).unwrap();
        let (lo, hi) = rho_bounds(&params).unwrap();
        let rho_min = rho_limit_at_minimum(&params);
        println!("alpha = {alpha}: bounds ({lo:.6}, {hi:.6}), limit at v_alpha = {rho_min:.8}");
        for mult in [1.0001, 10.0, 1e4] {
            let v = params.v_min() * mult;
            let est = estimate_rotation(&params, v, n, SeedChoice::DiagonalFar).unwrap();
            let asym = rho_asymptotic(&params, v).unwrap();
            println!(
                "  v = v_alpha * {mult:<7}: rho = {:.8}   asymptote {asym:.8}",
                est.rho
            );
        }
    }
    println!();

    // Monotonicity scan: strictly increasing for alpha < 1, strictly
    // decreasing for alpha > 1.
    for alpha in [0.5, 6.0] {
        let params = LynessParams::new(alpha).unwrap();
        let grid = log_spaced_levels(&params, 1.001, 1e4, 12);
        let scan = scan_rho(&params, &grid, n).unwrap();
        let trend = match scan.report.expected {
            Trend::Increasing => "increasing",
            Trend::Decreasing => "decreasing",
            Trend::Constant => "constant",
        };
        println!(
            "alpha = {alpha}: expected {trend}; {} violations, {} indistinguishable pairs",
            scan.report.violations, scan.report.indistinguishable
        );
        let first = scan.estimates.first().unwrap();
        let last = scan.estimates.last().unwrap();
        println!(
            "  rho spans {:.8} -> {:.8} over v in [{:.3}, {:.0}]",
            first.rho, last.rho, first.v, last.v
        );
    }
}
