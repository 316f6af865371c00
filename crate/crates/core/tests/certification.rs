mod common;

use common::{named_etfs, real_paley, ric_oracle, subset_distortion, subsets_by_mask};
use proptest::prelude::*;
use ripcert::certification::{
    coherence, delta1, fro_constant, gershgorin_bound, ric_exact, ric_power, roc_exact,
    roc_exact_all_sizes, spark, welch_bound, EnumOptions,
};
use ripcert::constructions::{bernoulli_matrix, gaussian_matrix, paley_etf};
use ripcert::linalg::operator_norm;
use ripcert::Frame;

fn opts() -> EnumOptions {
    EnumOptions::default().with_workers(1)
}

/// `theta_K` by bitmask enumeration over ordered disjoint pairs.
fn roc_oracle(f: &Frame, k: usize) -> f64 {
    let g = f.gram();
    let mut best: f64 = 0.0;
    for i in subsets_by_mask(f.n(), k) {
        for j in subsets_by_mask(f.n(), k) {
            if i.iter().any(|x| j.contains(x)) {
                continue;
            }
            best = best.max(operator_norm(&g.block(&i, &j)));
        }
    }
    best
}

fn seeded(gaussian: bool, m: usize, n: usize, seed: u64) -> Frame {
    if gaussian {
        gaussian_matrix(m, n, seed)
    } else {
        bernoulli_matrix(m, n, seed)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ric_exact_matches_singular_value_oracle(seed in 0u64..1000, gaussian: bool, k in 1usize..5) {
        let f = seeded(gaussian, 5, 8, seed);
        let e = ric_exact(&f, k, &opts()).unwrap();
        prop_assert!((e.value - ric_oracle(&f, k)).abs() <= 1e-10);
        prop_assert!((subset_distortion(&f, &e.witness) - e.value).abs() <= 1e-10);
    }

    #[test]
    fn sandwich_chain(seed in 0u64..1000, k in 1usize..4) {
        let f = gaussian_matrix(6, 8, seed);
        let fro = fro_constant(&f, k, &opts()).unwrap().value;
        let theta = roc_exact(&f, k, &opts()).unwrap().value;
        let dk = ric_exact(&f, k, &opts()).unwrap().value;
        let d2k = ric_exact(&f, 2 * k, &opts()).unwrap().value;
        let d1 = delta1(&f);
        prop_assert!(fro <= theta + 1e-9);
        prop_assert!(theta <= d2k + 1e-9);
        prop_assert!(d2k <= (theta + dk).min(2.0 * theta + d1) + 1e-9);
    }

    #[test]
    fn power_certificates_are_ordered(seed in 0u64..1000, k in 1usize..5) {
        let f = gaussian_matrix(6, 9, seed);
        let exact = ric_exact(&f, k, &opts()).unwrap().value;
        let mut prev = f64::INFINITY;
        for q in 1..=5u32 {
            let v = ric_power(&f, k, q, &opts()).unwrap().value;
            prop_assert!(v <= prev + 1e-9);
            prop_assert!(v >= exact - 1e-9);
            prop_assert!(v <= (k as f64).powf(1.0 / (2 * q) as f64) * exact + 1e-9);
            prev = v;
        }
    }

    #[test]
    fn gershgorin_dominates_for_unit_norm_columns(seed in 0u64..1000, k in 1usize..5) {
        let f = bernoulli_matrix(5, 9, seed);
        let g = gershgorin_bound(&f, k).unwrap();
        prop_assert!(ric_exact(&f, k, &opts()).unwrap().value <= g + 1e-9);
    }

    #[test]
    fn roc_over_all_sizes_equals_full_size(seed in 0u64..1000, k in 1usize..4) {
        let f = gaussian_matrix(4, 7, seed);
        let full = roc_exact(&f, k, &opts()).unwrap().value;
        let all = roc_exact_all_sizes(&f, k, &opts()).unwrap().value;
        prop_assert!((full - all).abs() <= 1e-12);
        prop_assert!((full - roc_oracle(&f, k)).abs() <= 1e-10);
    }

    #[test]
    fn small_spark_forces_unit_distortion(seed in 0u64..1000) {
        // 3 x 6: some 4 columns are always dependent
        let f = bernoulli_matrix(3, 6, seed);
        let s = spark(&f, 4, 1e-9, &opts()).unwrap();
        let sp = s.value().expect("dependent set within 4 columns");
        for k in sp..=4 {
            prop_assert!(ric_exact(&f, k, &opts()).unwrap().value >= 1.0 - 1e-9);
        }
    }
}

#[test]
fn power_identity_at_q1_on_every_etf() {
    for f in named_etfs() {
        let mu = coherence(&f).unwrap();
        assert!(
            (mu - welch_bound(f.m(), f.n()).unwrap()).abs() < 1e-12,
            "{}",
            f.label()
        );
        for k in 2..=3 {
            let v = ric_power(&f, k, 1, &opts()).unwrap().value;
            let want = ((k * (k - 1)) as f64).sqrt() * mu;
            assert!(
                (v - want).abs() <= 1e-10,
                "{} K={k}: {v} vs {want}",
                f.label()
            );
        }
    }
}

#[test]
fn paley5_subunity_and_spark() {
    let f = real_paley(5);
    for k in 1..=f.m() {
        let d = ric_exact(&f, k, &opts()).unwrap().value;
        assert!(d < 1.0, "K={k}: {d}");
        assert!((d - ric_oracle(&f, k)).abs() < 1e-10);
    }
    assert_eq!(
        spark(&paley_etf(5, true).unwrap(), 6, 1e-9, &opts())
            .unwrap()
            .value(),
        Some(4)
    );
}

#[test]
fn results_do_not_depend_on_workers() {
    let f = gaussian_matrix(6, 11, 4);
    let one = opts();
    let four = opts().with_workers(4);
    assert_eq!(
        ric_exact(&f, 3, &one).unwrap(),
        ric_exact(&f, 3, &four).unwrap()
    );
    assert_eq!(
        ric_power(&f, 3, 2, &one).unwrap(),
        ric_power(&f, 3, 2, &four).unwrap()
    );
    assert_eq!(
        roc_exact(&f, 2, &one).unwrap(),
        roc_exact(&f, 2, &four).unwrap()
    );
    assert_eq!(
        fro_constant(&f, 2, &one).unwrap(),
        fro_constant(&f, 2, &four).unwrap()
    );
    assert_eq!(
        spark(&f, 7, 1e-9, &one).unwrap(),
        spark(&f, 7, 1e-9, &four).unwrap()
    );
}
