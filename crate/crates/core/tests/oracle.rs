mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use satblow::solve::{min_exsat_exact, min_sat_exact, SolveOptions};
use satblow::{
    count_copies_through, count_partite_copies, is_extra_saturated, is_partite_saturated, PartiteGraph, PatternGraph,
};

fn random_subgraph(pattern: &PatternGraph, n: usize, density: f64, rng: &mut ChaCha8Rng) -> PartiteGraph {
    let k = slots(pattern, n).len();
    let mask = (0..k).filter(|_| rng.gen_bool(density)).fold(0u64, |m, b| m | 1 << b);
    graph_from_mask(pattern, n, mask)
}

#[test]
fn copy_counts_match_enumeration_for_every_small_pattern() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for v in 1..=5 {
        for pattern in all_patterns(v) {
            let max_n = if v <= 4 { 4 } else { 3 };
            for n in 1..=max_n {
                if slots(&pattern, n).len() > 64 {
                    continue;
                }
                for density in [0.3, 0.7, 1.0] {
                    let g = random_subgraph(&pattern, n, density, &mut rng);
                    assert_eq!(count_partite_copies(&g), brute_count(&g).into(), "{pattern:?} n={n}");
                }
            }
        }
    }
}

#[test]
fn through_edge_counts_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for name in ["k3", "k4", "p4", "c4", "star-3", "c5"] {
        let pattern = PatternGraph::named(name).unwrap();
        for n in 1..=3 {
            for _ in 0..4 {
                let g = random_subgraph(&pattern, n, 0.6, &mut rng);
                for e in slots(&pattern, n) {
                    let mut base = g.clone();
                    base.remove_edge(e.u, e.v).unwrap();
                    assert_eq!(count_copies_through(&base, e), brute_count_through(&base, e).into());
                }
            }
        }
    }
}

#[test]
fn verifiers_match_enumeration_on_every_subgraph() {
    for (name, n) in [("k3", 2), ("star-2", 2), ("p4", 2), ("k2", 3), ("c4", 1)] {
        let pattern = PatternGraph::named(name).unwrap();
        let k = slots(&pattern, n).len();
        for mask in 0u64..1 << k {
            let g = graph_from_mask(&pattern, n, mask);
            assert_eq!(
                is_partite_saturated(&g).is_ok(),
                brute_is_saturated(&g),
                "{name} {mask:b}"
            );
            assert_eq!(
                is_extra_saturated(&g).is_ok(),
                brute_is_extra_saturated(&g),
                "{name} {mask:b}"
            );
        }
    }
}

#[test]
fn exact_solver_matches_exhaustive_minimum() {
    for (name, n) in [
        ("k3", 2),
        ("star-2", 2),
        ("k2", 2),
        ("p3", 2),
        ("p4", 2),
        ("k2", 3),
        ("c4", 1),
    ] {
        let pattern = PatternGraph::named(name).unwrap();
        for symmetry in [true, false] {
            let options = SolveOptions {
                symmetry,
                ..SolveOptions::default()
            };
            let sat = min_sat_exact(&pattern, n, &options).unwrap();
            assert_eq!(
                sat.value,
                Some(brute_minimum(&pattern, n, brute_is_saturated)),
                "sat {name}[{n}]"
            );
            assert!(brute_is_saturated(sat.witness.as_ref().unwrap()));

            let exsat = min_exsat_exact(&pattern, n, &options).unwrap();
            assert_eq!(
                exsat.value,
                Some(brute_minimum(&pattern, n, brute_is_extra_saturated)),
                "exsat {name}[{n}]"
            );
            assert!(brute_is_extra_saturated(exsat.witness.as_ref().unwrap()));
        }
    }
}
