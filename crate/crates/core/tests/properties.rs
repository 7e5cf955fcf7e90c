//! Property-based invariants tying the layers together: mutation and trace
//! structure, target-space statistics, bound monotonicity, and the
//! correlation helper.

use proptest::prelude::*;

use efht_core::algorithms::{run_one_plus_lambda, run_one_plus_one, EaConfig};
use efht_core::bounds::{
    binomial, gap_sum_bound, harmonic, klow_ceil, knapsack_efht1, knapsack_regime,
    maxsat_efht1, onemax_efht1, KnapsackBoundParams, MaxSatBoundParams,
};
use efht_core::core_types::{derive_stream, flip_bits, target_space_stats, BitString};
use efht_core::experiments::pearson;
use efht_core::instrumentation::{first_hitting_time, gain_sequence};
use efht_core::problems::{
    enumerate_target_space, make_maxsat_c, parse_dimacs, serialize_dimacs, MinimizedView,
    OneMaxProblem, Problem,
};

fn knapsack_params(n: u64, lambda: u64) -> KnapsackBoundParams {
    KnapsackBoundParams {
        n,
        lambda,
        q: 3,
        n_feasible: 4 * n - 4,
        d_min: 2.0,
        v_min: 1.0,
        y0: 7.0,
        beta: 2.0,
    }
}

proptest! {
    #[test]
    fn flip_preserves_length_and_respects_extremes(
        mask in 0u64..1024,
        n in 1usize..11,
        seed in any::<u64>(),
    ) {
        let x = BitString::from_mask(mask, n);
        let mut rng = derive_stream(seed, 0);
        let same = flip_bits(&x, 0.0, &mut rng).unwrap();
        prop_assert_eq!(&same, &x);
        let flipped = flip_bits(&x, 1.0, &mut rng).unwrap();
        prop_assert_eq!(flipped.hamming_distance(&x), n);
        let any_p = flip_bits(&x, 0.3, &mut rng).unwrap();
        prop_assert_eq!(any_p.len(), n);
    }

    #[test]
    fn target_space_gap_statistics(levels in prop::collection::btree_set(-50i64..50, 2..12)) {
        let levels: Vec<f64> = levels.iter().map(|&v| v as f64).collect();
        let space = target_space_stats(&levels).unwrap();
        let gaps: Vec<f64> = levels.windows(2).map(|w| w[1] - w[0]).collect();
        let min_gap = gaps.iter().cloned().fold(f64::INFINITY, f64::min);
        let max_gap = gaps.iter().cloned().fold(0.0, f64::max);
        prop_assert_eq!(space.alpha(), min_gap);
        prop_assert_eq!(space.beta(), max_gap);
        prop_assert!(space.alpha() <= space.beta());
        prop_assert_eq!(space.min_level(), levels[0]);
        prop_assert_eq!(space.max_level(), *levels.last().unwrap());
    }

    #[test]
    fn elitist_traces_never_regress(n in 1usize..10, seed in any::<u64>()) {
        let view = MinimizedView::new(Problem::OneMax(OneMaxProblem::new(n))).unwrap();
        let cfg = EaConfig::one_plus_one(1.0 / n as f64).with_max_generations(200_000);
        let mut rng = derive_stream(seed, 7);
        let trace = run_one_plus_one(&view, &cfg, &BitString::zeros(n), &mut rng).unwrap();
        prop_assert!(trace.hit);
        for pair in trace.y_values.windows(2) {
            prop_assert!(pair[1] <= pair[0]);
        }
        // Gains telescope back to the total distance covered.
        let total: f64 = gain_sequence(&trace).total();
        prop_assert_eq!(total, trace.y_values[0] - trace.final_y());
        let t0 = first_hitting_time(&trace, 0.0).unwrap();
        prop_assert_eq!(t0, trace.generations_used);
    }

    #[test]
    fn offspring_batches_count_every_evaluation(
        n in 2usize..8,
        lambda in 1u64..6,
        seed in any::<u64>(),
    ) {
        let view = MinimizedView::new(Problem::OneMax(OneMaxProblem::new(n))).unwrap();
        let cfg = EaConfig::one_plus_lambda(lambda, 1.0 / n as f64)
            .with_max_generations(200_000);
        let mut rng = derive_stream(seed, 11);
        let trace = run_one_plus_lambda(&view, &cfg, &BitString::zeros(n), &mut rng).unwrap();
        prop_assert_eq!(trace.evaluations, trace.generations_used * lambda);
        prop_assert_eq!(trace.y_values.len() as u64, trace.generations_used + 1);
    }

    #[test]
    fn every_visited_level_is_in_the_target_space(n in 2usize..10, seed in any::<u64>()) {
        let problem = Problem::OneMax(OneMaxProblem::new(n));
        let space = enumerate_target_space(&problem, 12).unwrap();
        let view = MinimizedView::new(problem).unwrap();
        let cfg = EaConfig::one_plus_one(1.0 / n as f64).with_max_generations(200_000);
        let mut rng = derive_stream(seed, 3);
        let trace = run_one_plus_one(&view, &cfg, &BitString::zeros(n), &mut rng).unwrap();
        let max_level = view.optimum_fitness();
        for &y in &trace.y_values {
            prop_assert!(space.contains(max_level - y));
        }
    }

    #[test]
    fn dimacs_round_trip(n in 2usize..20) {
        let formula = make_maxsat_c(n).unwrap();
        let parsed = parse_dimacs(&serialize_dimacs(&formula)).unwrap();
        prop_assert_eq!(parsed.num_vars(), formula.num_vars());
        prop_assert_eq!(parsed.clauses(), formula.clauses());
    }

    #[test]
    fn knapsack_bound_decreases_with_lambda(n in 5u64..40, lambda in 1u64..200) {
        let tighter = knapsack_efht1(&knapsack_params(n, lambda + 1)).unwrap();
        let looser = knapsack_efht1(&knapsack_params(n, lambda)).unwrap();
        prop_assert!(tighter <= looser);
    }

    #[test]
    fn regime_relaxation_dominates_full_bound(n in 5u64..40, lambda in 1u64..200) {
        let p = knapsack_params(n, lambda);
        let full = knapsack_efht1(&p).unwrap();
        let (_, loose) = knapsack_regime(&p).unwrap();
        prop_assert!(loose >= full);
    }

    #[test]
    fn maxsat_bound_decreases_with_lambda(n in 2u64..25, lambda in 1u64..200) {
        let params = |l: u64| MaxSatBoundParams {
            n,
            lambda: l,
            n_opt: 2,
            s: 2 * (n - 1),
            beta: 1.0,
        };
        let tighter = maxsat_efht1(&params(lambda + 1)).unwrap();
        let looser = maxsat_efht1(&params(lambda)).unwrap();
        prop_assert!(tighter <= looser);
    }

    #[test]
    fn level_sum_with_unit_horizon_matches_bit_counting_bound(n in 1u64..60) {
        // With levels 0..n and h(r) = r / (e·n), the generic level sum
        // telescopes to e·n·H_n.
        let levels: Vec<f64> = (0..=n).map(|r| r as f64).collect();
        let space = target_space_stats(&levels).unwrap();
        let h = |r: f64| r / (std::f64::consts::E * n as f64);
        let general = gap_sum_bound(&space, h, 1).unwrap();
        let closed_form = onemax_efht1(n);
        prop_assert!((general - closed_form).abs() <= 1e-9 * closed_form);
    }

    #[test]
    fn binomial_prefix_sums_complete_the_power_of_two(q in 1u64..64) {
        let prefix: u128 = (0..q).map(|i| binomial(q, i)).sum();
        prop_assert_eq!(prefix + binomial(q, q), 1u128 << q);
    }

    #[test]
    fn binomial_symmetry_and_pascal(n in 1u64..64, k in 0u64..64) {
        prop_assume!(k <= n);
        prop_assert_eq!(binomial(n, k), binomial(n, n - k));
        if k >= 1 {
            prop_assert_eq!(
                binomial(n, k),
                binomial(n - 1, k - 1) + binomial(n - 1, k)
            );
        }
    }

    #[test]
    fn harmonic_is_increasing_and_bounded(n in 1u64..1000) {
        let h = harmonic(n);
        prop_assert!(h >= 1.0);
        prop_assert!(h < harmonic(n + 1));
        let ln = (n as f64).ln();
        prop_assert!(h > ln);
        prop_assert!(h <= ln + 1.0);
    }

    #[test]
    fn klow_ceil_is_the_integer_cover(k in 0.0f64..1e6) {
        let c = klow_ceil(k);
        prop_assert!(c >= 1);
        prop_assert!(c as f64 >= k);
        if k > 1.0 {
            prop_assert!((c as f64) - k < 1.0);
        }
    }

    #[test]
    fn pearson_symmetry_and_affine_invariance(
        xs in prop::collection::vec(-100.0f64..100.0, 3..12),
        a in 0.1f64..10.0,
        b in -5.0f64..5.0,
    ) {
        let ys: Vec<f64> = xs.iter().enumerate().map(|(i, &x)| x + i as f64).collect();
        prop_assume!(pearson(&xs, &ys).is_ok());
        let r = pearson(&xs, &ys).unwrap();
        let r_swapped = pearson(&ys, &xs).unwrap();
        prop_assert!((r - r_swapped).abs() < 1e-12);
        let scaled: Vec<f64> = xs.iter().map(|&x| a * x + b).collect();
        let r_scaled = pearson(&scaled, &ys).unwrap();
        prop_assert!((r - r_scaled).abs() < 1e-9);
        prop_assert!((-1.0..=1.0).contains(&r));
    }
}

#[test]
fn pearson_of_a_perfect_line_is_one() {
    let xs = [1.0, 2.0, 3.0, 4.0];
    let ys = [3.0, 5.0, 7.0, 9.0];
    let r = pearson(&xs, &ys).unwrap();
    assert!((r - 1.0).abs() < 1e-12);
}
