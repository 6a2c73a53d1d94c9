mod common;

use common::{brute_count, brute_is_extra_saturated, brute_is_saturated};
use satblow::constructions::{
    clique_exsat_construction, generic_exsat_bound, generic_exsat_construction, k4_construction, path_construction,
    path_sat_value, star_construction, star_sat_value, tree_exsat_construction, two_connected_upper, ConstructionSpec,
    Family,
};
use satblow::{is_partite_free, is_partite_saturated, PatternGraph};

#[test]
fn k4_small_cases() {
    // n = 2 is emitted and free; saturation is checked from n = 3.
    let g = k4_construction(2).unwrap();
    assert_eq!(g.edge_count(), 15);
    assert!(is_partite_free(&g).is_ok());
    assert_eq!(brute_count(&g), 0);
    assert!(brute_is_saturated(&k4_construction(3).unwrap()));
    assert!(k4_construction(1).is_err());
}

#[test]
fn stars_are_saturated() {
    for r in 2..=4 {
        for n in 1..=5 {
            let g = star_construction(r, n).unwrap();
            assert!(is_partite_saturated(&g).is_ok(), "r={r} n={n}");
            assert_eq!(g.edge_count() as i64, star_sat_value(r, n));
        }
    }
    assert!(brute_is_saturated(&star_construction(3, 2).unwrap()));
}

#[test]
fn paths_are_saturated() {
    for r in 4..=6 {
        for n in 2 * r..=2 * r + 2 {
            let g = path_construction(r, n).unwrap();
            assert!(is_partite_saturated(&g).is_ok(), "r={r} n={n}");
            assert_eq!(g.edge_count() as i64, path_sat_value(r, n));
        }
    }
}

#[test]
fn extra_saturation_generators_match_enumeration() {
    for (r, n) in [(3, 1), (3, 2), (4, 1), (4, 2)] {
        assert!(
            brute_is_extra_saturated(&clique_exsat_construction(r, n).unwrap()),
            "K{r}[{n}]"
        );
    }
    for name in ["p3", "p4", "star-3"] {
        let tree = PatternGraph::named(name).unwrap();
        for n in 1..=3 {
            // Below n = 4 the verdict may go either way; it must agree with enumeration.
            let g = tree_exsat_construction(&tree, n).unwrap();
            assert_eq!(brute_is_extra_saturated(&g), satblow::is_extra_saturated(&g).is_ok());
        }
        assert!(brute_is_extra_saturated(&tree_exsat_construction(&tree, 4).unwrap()));
    }
    for name in ["c4", "k3", "p4"] {
        let pattern = PatternGraph::named(name).unwrap();
        for n in 1..=2 {
            let g = generic_exsat_construction(&pattern, n).unwrap();
            assert!(brute_is_extra_saturated(&g), "{name}[{n}]");
            assert!(g.edge_count() as i64 <= generic_exsat_bound(&pattern, n));
        }
    }
}

#[test]
fn two_connected_requires_two_connectivity() {
    assert!(two_connected_upper(&PatternGraph::path(4).unwrap(), 4, 0).is_err());
    assert!(two_connected_upper(&PatternGraph::cycle(4).unwrap(), 3, 0).is_err());
    let c5 = PatternGraph::cycle(5).unwrap();
    let stages = two_connected_upper(&c5, 5, 3).unwrap();
    assert!(stages.g1.is_subgraph_of(&stages.g2) && stages.g2.is_subgraph_of(&stages.g3));
    assert!(brute_count(&stages.g2) == 0);
}

#[test]
fn generators_are_deterministic() {
    for family in Family::ALL {
        let pattern = match family {
            Family::TwoConnected => Some(PatternGraph::cycle(4).unwrap()),
            Family::GenericExsat | Family::TreeExsat => Some(PatternGraph::path(4).unwrap()),
            _ => None,
        };
        let r = match family {
            Family::Path => Some(4),
            Family::Star | Family::CliqueExsat => Some(3),
            _ => None,
        };
        let spec = ConstructionSpec {
            family,
            n: 8,
            r,
            pattern,
            seed: 5,
        };
        let a = spec.build().unwrap();
        let b = spec.build().unwrap();
        assert_eq!(a.graph, b.graph, "{family}");
        if family != Family::TwoConnected {
            assert_eq!(a.graph.edge_count() as i64, a.formula, "{family}");
        } else {
            assert!(a.graph.edge_count() as i64 <= a.formula);
        }
    }
}

#[test]
fn out_of_range_parameters_are_flagged() {
    let flagged = |family, n, r: Option<usize>, pattern: Option<PatternGraph>| {
        let spec = ConstructionSpec {
            family,
            n,
            r,
            pattern,
            seed: 0,
        };
        !spec.build().unwrap().flags.is_empty()
    };
    assert!(flagged(Family::K4, 2, None, None));
    assert!(!flagged(Family::K4, 3, None, None));
    assert!(flagged(Family::Path, 7, Some(4), None));
    assert!(!flagged(Family::Path, 8, Some(4), None));
    assert!(flagged(Family::TreeExsat, 3, None, PatternGraph::named("p3")));
    assert!(!flagged(Family::TreeExsat, 4, None, PatternGraph::named("p3")));
}
