//! Bit-exact global periodicity: every positive orbit returns after 5 steps
//! at alpha = 1, after 6 at alpha = 0, and after 4 for the normalized
//! infinite-alpha map. Run with `cargo run --example exact_cycles`.

use lyness::exact::{
    self, iterate_exact, normalized_infinite_alpha_step_exact, ExactRational,
};
use rand::SeedableRng;

fn main() {
    let one = ExactRational::one();
    let seed = (
        ExactRational::new(3, 2).unwrap(),
        ExactRational::new(7, 5).unwrap(),
    );
    println!("alpha = 1, seed ({}, {}):", seed.0, seed.1);
    let orbit = iterate_exact(&seed, 5, &one, None).unwrap();
    for (k, p) in orbit.iter().enumerate() {
        println!("  f^{k} = ({}, {})", p.0, p.1);
    }
    assert_eq!(orbit[5], seed);
    println!("  returned exactly after 5 steps\n");

    let zero = ExactRational::zero();
    let seed6 = (ExactRational::from_integer(2), ExactRational::from_integer(3));
    let orbit = iterate_exact(&seed6, 6, &zero, None).unwrap();
    println!(
        "alpha = 0, seed (2, 3): x-projection {}",
        orbit.iter().map(|p| p.0.to_string()).collect::<Vec<_>>().join(", ")
    );
    assert_eq!(orbit[6], seed6);
    println!("  returned exactly after 6 steps\n");

    let mut p = (ExactRational::from_integer(2), ExactRational::from_integer(5));
    let start = p.clone();
    print!("normalized infinite-alpha map, seed (2, 5):");
    for _ in 0..4 {
        p = normalized_infinite_alpha_step_exact(&p).unwrap();
        print!(" -> ({}, {})", p.0, p.1);
    }
    assert_eq!(p, start);
    println!("\n  returned exactly after 4 steps\n");

    // Between the special parameters nothing closes: numerators grow until
    // the bit cap trips.
    let two = ExactRational::from_integer(2);
    match iterate_exact(&seed, 100_000, &two, Some(512)) {
        Err(e) => println!("alpha = 2 from the same seed: {e}"),
        Ok(_) => unreachable!("alpha = 2 orbits are not periodic"),
    }

    // The same holds for 100 random rational seeds.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let s = (
            exact::random_positive_rational(&mut rng, 1000),
            exact::random_positive_rational(&mut rng, 1000),
        );
        assert_eq!(iterate_exact(&s, 5, &one, None).unwrap()[5], s);
        assert_eq!(iterate_exact(&s, 6, &zero, None).unwrap()[6], s);
    }
    println!("100 random rational seeds: all 5-cycles (alpha=1) and 6-cycles (alpha=0)");
}
