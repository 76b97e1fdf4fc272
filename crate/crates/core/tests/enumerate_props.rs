use proptest::prelude::*;

use circlefix::enumerate::{brute_force_admissible, enumerate_admissible, EnumerationQuery, Filter};
use circlefix::fpdata::{gen_cpn, gen_s2, gen_s6, product, FixedPointDatum};
use circlefix::verify::{check_rigidity, check_smallest_weight_pairing, check_weight_pairing};

fn filter_subset() -> impl Strategy<Value = Vec<Filter>> {
    proptest::sample::subsequence(Filter::ALL.to_vec(), 0..=3)
}

fn generator() -> impl Strategy<Value = FixedPointDatum> {
    prop_oneof![
        (1i64..6).prop_map(|w| gen_s2(w).unwrap()),
        (1i64..5, 1i64..5).prop_map(|(a, b)| gen_s6(a, b).unwrap()),
        proptest::sample::subsequence((0i64..9).collect::<Vec<_>>(), 1..5)
            .prop_map(|e| gen_cpn(&e).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // any filter subset and flag combination agrees with the unpruned search
    #[test]
    fn pruned_search_matches_oracle(
        n in 0usize..=2, k in 1usize..=3, w in 1i64..=2,
        filters in filter_subset(), effective: bool, dedup: bool,
    ) {
        let q = EnumerationQuery::new(n, k, w)
            .filters(filters)
            .effective(effective)
            .dedup_sign_flip(dedup);
        let fast = enumerate_admissible(&q).unwrap();
        let slow = brute_force_admissible(&q).unwrap();
        prop_assert_eq!(fast.admissible, slow.admissible);
    }

    #[test]
    fn worker_count_does_not_change_output(n in 1usize..=3, k in 2usize..=4, workers in 1usize..=6) {
        let q = EnumerationQuery::new(n, k, 2);
        let a = enumerate_admissible(&q.clone().workers(1)).unwrap().to_json();
        let b = enumerate_admissible(&q.workers(workers)).unwrap().to_json();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip(d in generator(), e in generator()) {
        for x in [d.clone(), product(&d, &e)] {
            let text = serde_json::to_string(&x).unwrap();
            let back: FixedPointDatum = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}

#[test]
fn admissible_data_pass_filters_and_grow_with_bound() {
    for (n, k) in [(1, 2), (2, 3), (2, 4), (3, 2), (3, 4)] {
        let mut previous: Vec<FixedPointDatum> = Vec::new();
        for w in 1..=3 {
            let r = enumerate_admissible(&EnumerationQuery::new(n, k, w)).unwrap();
            for d in &r.admissible {
                assert!(d.is_canonical() && d.is_effective());
                assert!(check_weight_pairing(d).passed);
                assert!(check_smallest_weight_pairing(d).passed);
                assert!(check_rigidity(d).passed);
                assert!(d.weights().all(|x| x.abs() <= w));
            }
            assert!(previous.iter().all(|d| r.admissible.contains(d)), "n={n} k={k} W={w}");
            assert_eq!(r.admissible.len(), r.diagnostics.len());
            previous = r.admissible;
        }
    }
}

#[test]
fn counters_account_for_every_candidate() {
    let q = EnumerationQuery::new(2, 4, 2);
    let r = brute_force_admissible(&q).unwrap();
    let rejected: u64 = r.counters.pruned.values().sum();
    assert_eq!(r.counters.candidates, q.candidate_space() as u64);
    assert_eq!(rejected + r.admissible.len() as u64, r.counters.candidates);
}
