//! Frieze patterns: build from a diagonal, render the staggered table,
//! inspect quiddity rows and continuants, test the integer criterion, and
//! close Halperin's five-term cycle.
//! Run with `cargo run --example frieze_patterns`.

use lyness::exact::ExactRational;
use lyness::frieze::{
    build_from_integer_diagonal, check_integer_criterion, continuant, halperin_cycle_check,
    parse_staggered_grid, random_integer_seed, verify_pattern,
};
use rand::SeedableRng;

fn main() {
    // An order-7 integer pattern from the diagonal 1,1,1,1,2,1.
    let p = build_from_integer_diagonal(&[1, 1, 1, 1, 2, 1]).unwrap();
    println!("order-7 pattern from diagonal 1,1,1,1,2,1:\n");
    print!("{}", p.render_staggered(11));
    let quiddity: Vec<String> = p.quiddity_row().iter().map(|a| a.to_string()).collect();
    println!("\nquiddity row: {}", quiddity.join(" "));

    // Entries expand as continuants over the quiddity row.
    let diag: Vec<ExactRational> = (1..4).map(|t| p.entry(t - 1, t + 1)).collect();
    println!(
        "continuant over a_1..a_3 = {} equals entry (0, 4) = {}\n",
        continuant(&diag),
        p.entry(0, 4)
    );

    // Two short integer diagonals juxtapose into a longer one (sharing a 1).
    let joined = [1i64, 2, 5, 3, 1, 2, 3, 4, 1];
    println!("juxtaposing 1,2,5,3,1 and 1,2,3,4,1 on a shared 1:");
    let big = build_from_integer_diagonal(&joined).unwrap();
    print!("{}", big.render_staggered(14));
    println!(
        "integer criterion holds: {}; pattern all-integer: {}\n",
        check_integer_criterion(&joined).holds,
        big.is_integer()
    );

    // The criterion is sharp: 1,3,1 fails it (3 does not divide 1 + 1) and
    // its pattern picks up fractions.
    let frac = build_from_integer_diagonal(&[1, 3, 1]).unwrap();
    println!(
        "diagonal 1,3,1: criterion holds = {}, entry (0,2) = {}",
        check_integer_criterion(&[1, 3, 1]).holds,
        frac.entry(0, 2)
    );

    // Rendered text round-trips through the verifier.
    let grid = parse_staggered_grid(&big.render_staggered(2 * big.order())).unwrap();
    let report = verify_pattern(&grid).unwrap();
    println!("verifier on the rendered order-{} table: valid = {}\n", report.order, report.is_valid());

    // Halperin's cycle: three of the five relations force the other two and
    // the period.
    let u = [
        ExactRational::from_integer(1),
        ExactRational::from_integer(1),
        ExactRational::from_integer(2),
        ExactRational::from_integer(3),
        ExactRational::from_integer(2),
    ];
    println!("Halperin cycle (1,1,2,3,2) closes with period 5: {}", halperin_cycle_check(&u).unwrap());

    // Random integer diagonals from the extension rule m*f_s - f_{s-1}.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    println!("\nrandom integer diagonals (all satisfy the criterion and build):");
    for _ in 0..5 {
        let seed = random_integer_seed(&mut rng, 10);
        let pattern = build_from_integer_diagonal(&seed).unwrap();
        println!("  {:?} -> order {}, integer: {}", seed, pattern.order(), pattern.is_integer());
    }
}
