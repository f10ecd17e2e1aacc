//! Property tests for the structural invariants: exact global periodicity,
//! inverse round-trips, conservation of V, level-geometry consistency, and
//! frieze symmetries.

use proptest::prelude::*;

use lyness::exact::{self, ExactRational};
use lyness::frieze;
use lyness::invariant::{diagonal_invariant, diagonal_roots, interval_bounds, invariant_v};
use lyness::map::{normalized_infinite_alpha_step, LynessParams, Point2};

fn rational() -> impl Strategy<Value = ExactRational> {
    (1i64..2_000, 1i64..2_000).prop_map(|(n, d)| ExactRational::new(n, d).unwrap())
}

fn point() -> impl Strategy<Value = Point2> {
    (0.01f64..100.0, 0.01f64..100.0).prop_map(|(x, y)| Point2::new(x, y).unwrap())
}

proptest! {
    #[test]
    fn exact_periodicity_at_special_parameters(x in rational(), y in rational()) {
        let seed = (x, y);
        let one = ExactRational::one();
        let zero = ExactRational::zero();
        prop_assert_eq!(&exact::iterate_exact(&seed, 5, &one, None).unwrap()[5], &seed);
        prop_assert_eq!(&exact::iterate_exact(&seed, 6, &zero, None).unwrap()[6], &seed);
        let mut p = seed.clone();
        for _ in 0..4 {
            p = exact::normalized_infinite_alpha_step_exact(&p).unwrap();
        }
        prop_assert_eq!(p, seed);
    }

    #[test]
    fn inverse_round_trip(p in point(), alpha in 0.0f64..50.0) {
        let params = LynessParams::new(alpha).unwrap();
        let back = params.inverse_step(params.step(p));
        prop_assert!(back.distance(p) / p.norm() <= 1e-12);
        let forth = params.step(params.inverse_step(p));
        prop_assert!(forth.distance(p) / p.norm() <= 1e-12);
    }

    #[test]
    fn normalized_map_four_cycle_float(p in point()) {
        let mut q = p;
        for _ in 0..4 {
            q = normalized_infinite_alpha_step(q);
        }
        prop_assert!(q.distance(p) / p.norm() <= 1e-12);
    }

    #[test]
    fn invariant_is_conserved(p in point(), alpha in 0.0f64..20.0) {
        let params = LynessParams::new(alpha).unwrap();
        let v0 = invariant_v(p, &params);
        let v1 = invariant_v(params.step(p), &params);
        prop_assert!((v1 - v0).abs() <= 1e-13 * v0.max(1.0) * 10.0);
        prop_assert!(v0 >= params.v_min() * (1.0 - 1e-12));
    }

    #[test]
    fn jacobian_eigenvalues_on_unit_circle(alpha in 0.0f64..100.0) {
        let params = LynessParams::new(alpha).unwrap();
        let j = params.jacobian_at_fixed_point();
        let trace = j[0][0] + j[1][1];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        prop_assert!((det - 1.0).abs() < 1e-15);
        // |trace| < 2, so eigenvalues are conjugate with |lambda|^2 = det.
        prop_assert!(trace.abs() < 2.0);
        let modulus = ((trace / 2.0).powi(2) + (det - (trace / 2.0).powi(2))).sqrt();
        prop_assert!((modulus - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_roots_bracket_the_interval(alpha in 0.0f64..20.0, mult in 1.001f64..200.0) {
        let params = LynessParams::new(alpha).unwrap();
        let v = params.v_min() * mult;
        let (near, far) = diagonal_roots(&params, v).unwrap();
        prop_assert!(near < params.omega() && params.omega() < far);
        prop_assert!((diagonal_invariant(near, alpha) - v).abs() <= 1e-9 * v);
        prop_assert!((diagonal_invariant(far, alpha) - v).abs() <= 1e-9 * v);
        let interval = interval_bounds(&params, v).unwrap();
        prop_assert!(interval.lo <= near && far <= interval.hi);
        // The interval endpoints lie on the curve.
        let y_lo = (interval.lo + alpha).sqrt();
        let p_lo = Point2::new(interval.lo, y_lo).unwrap();
        prop_assert!((invariant_v(p_lo, &params) - v).abs() <= 1e-8 * v);
    }

    #[test]
    fn orbits_stay_positive_and_trapped(alpha in 0.0f64..10.0, mult in 1.01f64..50.0) {
        let params = LynessParams::new(alpha).unwrap();
        let v = params.v_min() * mult;
        let (_, far) = diagonal_roots(&params, v).unwrap();
        let interval = interval_bounds(&params, v).unwrap();
        let mut p = Point2::new(far, far).unwrap();
        for _ in 0..200 {
            p = params.step(p);
            prop_assert!(p.x() > 0.0 && p.y() > 0.0);
            prop_assert!(p.x() >= interval.lo - 1e-9 && p.x() <= interval.hi + 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frieze_round_trip_and_symmetries(gen_seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(gen_seed);
        let seed = frieze::random_integer_seed(&mut rng, 10);
        let p = frieze::build_from_integer_diagonal(&seed).unwrap();
        prop_assert!(p.is_integer());
        let n = p.order() as i64;
        // Diagonal reads back exactly.
        let back: Vec<ExactRational> = (0..n - 1).map(|s| p.entry(-1, s)).collect();
        prop_assert_eq!(back.as_slice(), p.f_seed());
        // Antiperiodicity, periodicity, glide symmetry on a window.
        for r in -n..n {
            for s in r + 1..r + n {
                prop_assert_eq!(p.entry(r + n, s + n), p.entry(r, s));
                prop_assert_eq!(p.entry(s, r + n), p.entry(r, s));
                prop_assert!(p.entry(r, s).is_positive());
            }
        }
    }

    #[test]
    fn frieze_entries_satisfy_unimodular_rule(gen_seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(gen_seed);
        let seed = frieze::random_integer_seed(&mut rng, 8);
        let p = frieze::build_from_integer_diagonal(&seed).unwrap();
        let n = p.order() as i64;
        for r in 0..n {
            for s in r..r + n {
                let det = p.entry(r - 1, s) * p.entry(r, s + 1)
                    - p.entry(r, s) * p.entry(r - 1, s + 1);
                prop_assert!(det.is_one());
            }
        }
    }
}
