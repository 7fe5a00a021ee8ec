mod common;

use common::{naive_ktt, naive_kttt, naive_triangles};
use num_bigint::BigUint;
use proptest::prelude::*;
use tritur_core::constructions::{sample_bipartite, sample_tripartite};
use tritur_core::graph::{BipartiteGraph, Part, TripartiteGraph};
use tritur_core::patterns::{
    contains_ktt_with, contains_kttt_with, count_k11t, find_triangle, kst_threshold, SearchConfig,
};

fn bipartite(l: usize, r: usize, p: f64, seed: u64) -> BipartiteGraph {
    let sq = sample_bipartite(l.max(r), p, seed);
    let left: Vec<usize> = (0..l).collect();
    let right: Vec<usize> = (0..r).collect();
    sq.induced(&left, &right)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ktt_matches_naive(l in 1usize..9, r in 1usize..9, p in 0.2f64..0.9, seed: u64, t in 1usize..4) {
        let h = bipartite(l, r, p, seed);
        let seq = contains_ktt_with(&h, t, &SearchConfig::default().sequential()).unwrap();
        let par = contains_ktt_with(&h, t, &SearchConfig::default()).unwrap();
        prop_assert_eq!(&seq, &par);
        prop_assert_eq!(seq.is_some(), naive_ktt(&h, t));
        if let Some(w) = seq {
            prop_assert!(w.validate(&h).is_ok());
        }
    }

    #[test]
    fn kttt_matches_naive(s in prop::array::uniform3(1usize..7), p in 0.3f64..0.95, seed: u64, t in 1usize..4) {
        let g = sample_tripartite(s, p, seed);
        let seq = contains_kttt_with(&g, t, &SearchConfig::default().sequential()).unwrap();
        let par = contains_kttt_with(&g, t, &SearchConfig::default()).unwrap();
        prop_assert_eq!(&seq, &par);
        prop_assert_eq!(seq.is_some(), naive_kttt(&g, t));
        if let Some(w) = seq {
            prop_assert!(w.validate(&g).is_ok());
        }
    }

    #[test]
    fn k11t_with_t1_counts_triangles(s in prop::array::uniform3(1usize..7), p in 0.2f64..0.9, seed: u64) {
        let g = sample_tripartite(s, p, seed);
        let [a, b, c] = Part::ALL.map(|q| g.part_set(q));
        prop_assert_eq!(count_k11t(&g, &a, &b, &c, 1).unwrap(), BigUint::from(naive_triangles(&g)));
        prop_assert_eq!(find_triangle(&g).is_some(), naive_triangles(&g) > 0);
    }

    #[test]
    fn kst_threshold_forces_ktt(n in 2usize..9, p in 0.5f64..1.0, seed: u64, t in 1usize..4) {
        let h = sample_bipartite(n, p, seed);
        if h.edge_count() as u64 >= kst_threshold(n as u64, n as u64, t as u32, 4.0) {
            prop_assert!(contains_ktt_with(&h, t, &SearchConfig::default()).unwrap().is_some());
        }
    }
}

#[test]
fn kst_calibration_corpus() {
    let mut exercised = 0;
    for n in (8..=30).step_by(2) {
        for (i, p) in [0.8, 0.9, 0.97].into_iter().enumerate() {
            let h = sample_bipartite(n, p, (n * 10 + i) as u64);
            for t in 1..=2u32 {
                if h.edge_count() as u64 >= kst_threshold(n as u64, n as u64, t, 4.0) {
                    exercised += 1;
                    assert!(contains_ktt_with(&h, t as usize, &SearchConfig::default())
                        .unwrap()
                        .is_some());
                }
            }
        }
    }
    assert!(
        exercised >= 10,
        "corpus reached the threshold only {exercised} times"
    );
}

#[test]
fn budget_is_an_error_not_a_miss() {
    let g = TripartiteGraph::complete([5; 3]);
    assert!(contains_kttt_with(&g, 3, &SearchConfig::with_budget(2)).is_err());
    assert!(contains_kttt_with(&g, 3, &SearchConfig::default())
        .unwrap()
        .is_some());
}
