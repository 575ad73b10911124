//! Property tests over the numeric kernels and the persistence formats.

use cqdds::bench::FunctionId;
use cqdds::delta::{delta_of_r, from_internal, invert_delta, to_internal, R_CEIL, R_FLOOR};
use cqdds::harness::io::{records_from_csv, records_to_csv};
use cqdds::harness::matrix::TrialRecord;
use cqdds::optimizers::AlgorithmId;
use cqdds::stats::{precision_curve, win_tie_loss, Direction, Outcome, SampleSummary};
use proptest::prelude::*;

proptest! {
    #[test]
    fn delta_is_monotone_and_positive(
        a in R_FLOOR..R_CEIL,
        b in R_FLOOR..R_CEIL,
        k in 0.5f64..10.0,
    ) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let dlo = delta_of_r(lo, k).unwrap();
        let dhi = delta_of_r(hi, k).unwrap();
        prop_assert!(dlo > 0.0);
        prop_assert!(dhi >= dlo);
    }

    #[test]
    fn inversion_roundtrips_within_1e9(r in R_FLOOR..=R_CEIL) {
        let back = invert_delta(delta_of_r(r, 5.0).unwrap(), 5.0).unwrap();
        prop_assert!((back - r).abs() < 1e-9);
    }

    #[test]
    fn internal_mapping_is_a_bijection(
        lo in -600.0f64..599.0,
        width in 1e-3f64..1200.0,
        frac in 0.0f64..=1.0,
    ) {
        let hi = lo + width;
        let x = lo + frac * width;
        let back = from_internal(to_internal(x, lo, hi), lo, hi);
        prop_assert!((back - x).abs() <= 1e-12 * x.abs().max(1.0));
    }

    #[test]
    fn precision_curve_is_monotone_and_bounded(
        costs in prop::collection::vec(-1e6f64..1e6, 1..64),
    ) {
        let curve = precision_curve(&costs).unwrap();
        prop_assert_eq!(curve.len(), 10);
        for w in curve.windows(2) {
            prop_assert!(w[1].1 >= w[0].1);
        }
        prop_assert!(curve.iter().all(|(_, c)| *c <= costs.len()));
    }

    #[test]
    fn win_tie_loss_partitions_the_row(
        values in prop::collection::vec(-1e9f64..1e9, 2..12),
    ) {
        let outcomes = win_tie_loss(&values, Direction::Minimize).unwrap();
        let wins = outcomes.iter().filter(|o| **o == Outcome::Win).count();
        let ties = outcomes.iter().filter(|o| **o == Outcome::Tie).count();
        prop_assert_eq!(outcomes.len(), values.len());
        // exactly one winner, or a tie group of at least two
        prop_assert!(wins == 1 && ties == 0 || wins == 0 && ties >= 2);
    }

    #[test]
    fn summaries_respect_the_samuelson_bound(
        costs in prop::collection::vec(-1e4f64..1e4, 2..40),
    ) {
        let s = SampleSummary::from_costs(&costs).unwrap();
        prop_assert!(s.samuelson_consistent());
        prop_assert!(s.min <= s.mean);
    }

    #[test]
    fn records_csv_roundtrips_all_numeric_fields(
        cost in -1e12f64..1e12,
        coords in prop::collection::vec(-650.0f64..650.0, 2..31),
        seed in any::<u64>(),
        trial in 0u32..1000,
        evals in 0u64..1_000_000,
    ) {
        let record = TrialRecord {
            algorithm: AlgorithmId::Cqdds,
            function: FunctionId::F11,
            dim: coords.len(),
            trial,
            sub_seed: seed,
            best_cost: cost,
            best_position: coords,
            evaluations: evals,
            wall_time_ms: 99,
        };
        let parsed = records_from_csv(&records_to_csv(std::slice::from_ref(&record))).unwrap();
        prop_assert_eq!(parsed.len(), 1);
        prop_assert_eq!(parsed[0].best_cost.to_bits(), record.best_cost.to_bits());
        prop_assert_eq!(&parsed[0].best_position, &record.best_position);
        prop_assert_eq!(parsed[0].sub_seed, record.sub_seed);
        prop_assert_eq!(parsed[0].evaluations, record.evaluations);
    }

    #[test]
    fn chaos_sequences_stay_in_range(seed in any::<u64>(), n in 1usize..4096) {
        let ws = cqdds::chaos::sample_sequence(seed, n).unwrap();
        prop_assert_eq!(ws.len(), n);
        prop_assert!(ws.iter().all(|w| (0.0..=1.0).contains(w)));
    }
}
