//! Brute-force references. Nothing here calls the library's counting,
//! verification or search code; graphs are only used as edge containers.

#![allow(dead_code)]

use satblow::{BlowupHost, Edge, PartiteGraph, PartiteVertex, PatternGraph};

/// Every `(part, index)` pair joined by a pattern edge, built from the pattern
/// edge list directly.
pub fn slots(pattern: &PatternGraph, n: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for &(i, j) in pattern.edges() {
        for a in 0..n {
            for b in 0..n {
                out.push(Edge::new(PartiteVertex::new(i, a), PartiteVertex::new(j, b)));
            }
        }
    }
    out.sort();
    out
}

/// All `n^v` transversals, as index vectors.
pub fn transversals(parts: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(parts as u32);
    (0..total).map(move |mut code| {
        let mut choice = vec![0; parts];
        for slot in choice.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        choice
    })
}

fn carries(g: &PartiteGraph, choice: &[usize]) -> bool {
    g.pattern()
        .edges()
        .iter()
        .all(|&(i, j)| g.has_edge(PartiteVertex::new(i, choice[i]), PartiteVertex::new(j, choice[j])))
}

pub fn brute_count(g: &PartiteGraph) -> u64 {
    transversals(g.parts(), g.n()).filter(|c| carries(g, c)).count() as u64
}

/// Copies of `g + e` that contain both endpoints of `e`.
pub fn brute_count_through(g: &PartiteGraph, e: Edge) -> u64 {
    let mut h = g.clone();
    h.add_edge(e.u, e.v).unwrap();
    transversals(g.parts(), g.n())
        .filter(|c| c[e.u.part] == e.u.index && c[e.v.part] == e.v.index && carries(&h, c))
        .count() as u64
}

pub fn missing_slots(g: &PartiteGraph) -> Vec<Edge> {
    slots(g.pattern(), g.n())
        .into_iter()
        .filter(|e| !g.has_edge(e.u, e.v))
        .collect()
}

fn plus(g: &PartiteGraph, e: Edge) -> PartiteGraph {
    let mut h = g.clone();
    h.add_edge(e.u, e.v).unwrap();
    h
}

pub fn brute_is_saturated(g: &PartiteGraph) -> bool {
    brute_count(g) == 0 && missing_slots(g).into_iter().all(|e| brute_count(&plus(g, e)) > 0)
}

pub fn brute_is_extra_saturated(g: &PartiteGraph) -> bool {
    let base = brute_count(g);
    missing_slots(g).into_iter().all(|e| brute_count(&plus(g, e)) > base)
}

pub fn graph_from_mask(pattern: &PatternGraph, n: usize, mask: u64) -> PartiteGraph {
    let host = BlowupHost::new(pattern.clone(), n).unwrap();
    let chosen = slots(pattern, n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    PartiteGraph::from_edges(host, chosen).unwrap()
}

/// Minimum edge count over all subsets of slots satisfying `pred`.
pub fn brute_minimum(pattern: &PatternGraph, n: usize, pred: fn(&PartiteGraph) -> bool) -> usize {
    let k = slots(pattern, n).len();
    assert!(k <= 20, "{k} slots is too many for exhaustive search");
    (0u64..1 << k)
        .filter(|&mask| pred(&graph_from_mask(pattern, n, mask)))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("a maximal partite-free subgraph always qualifies")
}

/// Every labelled pattern on `v` vertices, isolated vertices included.
pub fn all_patterns(v: usize) -> Vec<PatternGraph> {
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p);
            PatternGraph::new(v, edges).unwrap()
        })
        .collect()
}
