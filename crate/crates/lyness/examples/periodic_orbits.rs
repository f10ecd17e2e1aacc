//! Achievable orbit periods and the exact period-9/11 level curves.
//! Run with `cargo run --example periodic_orbits`.

use lyness::map::LynessParams;
use lyness::periodic::{
    critical_alpha, period_set, special_level, tangency_residual, verify_closure, SpecialPeriod,
};
use lyness::rotation::{estimate_rotation, SeedChoice};

fn main() {
    // Which periods occur at all? q is achievable iff some coprime p/q lies
    // strictly between 1/6 and 1/4 (and is not 1/5 itself).
    let witnesses = period_set(30);
    println!("q  : admissible p");
    for w in &witnesses {
        let ps = if w.p_list.is_empty() {
            "-".to_string()
        } else {
            w.p_list.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        };
        println!("{:>2} : {ps}", w.q);
    }
    let achievable: Vec<u32> = witnesses.iter().filter(|w| w.is_achievable()).map(|w| w.q).collect();
    println!("achievable periods up to 30: {achievable:?}\n");

    // Periods 9 and 11 admit closed-form levels.
    println!("alpha_9  = {:.9}", critical_alpha(SpecialPeriod::Nine));
    println!("alpha_11 = {:.9}\n", critical_alpha(SpecialPeriod::Eleven));

    for (period, alpha, shift) in [(SpecialPeriod::Nine, 6.0, 4), (SpecialPeriod::Eleven, 0.2, 5)] {
        let level = special_level(period, alpha).unwrap();
        println!(
            "period {} at alpha = {alpha}: v_bar = {:.12}, valid = {}",
            period.value(),
            level.v_bar,
            level.valid
        );
        let report = verify_closure(&level, 1e-8).unwrap();
        println!(
            "  orbit through ({:.9}, {:.9}) closes after {} steps, residual {:.2e}, no early return: {}",
            report.seed.x(),
            report.seed.y(),
            report.period,
            report.closure_residual,
            report.principal
        );

        // The symmetric construction: halfway round, the orbit must touch
        // the horizontal-tangency locus x^2 - y - alpha = 0.
        let params = LynessParams::new(alpha).unwrap();
        let mut p = report.seed;
        for _ in 0..shift {
            p = params.step(p);
        }
        println!(
            "  tangency residual at f^{shift}(P): {:.2e}",
            tangency_residual(p, &params)
        );

        let est = estimate_rotation(&params, level.v_bar, 999_999, SeedChoice::DiagonalFar).unwrap();
        println!(
            "  rotation number on the curve: {:.10} (= 2/{})\n",
            est.rho,
            period.value()
        );
    }

    // Below the critical parameter the period-9 level sinks under v_alpha
    // and the curve disappears.
    let too_small = special_level(SpecialPeriod::Nine, 2.0).unwrap();
    println!(
        "period 9 at alpha = 2: v_bar = {:.6} <= v_alpha = {:.6}, valid = {}",
        too_small.v_bar,
        LynessParams::new(2.0).unwrap().v_min(),
        too_small.valid
    );
}
