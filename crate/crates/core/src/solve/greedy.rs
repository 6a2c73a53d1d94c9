use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::copies::{has_copy_through, has_partite_copy};
use crate::error::{Error, Result};
use crate::graph::PartiteGraph;
use crate::host::Edge;

fn shuffled_non_edges(g: &PartiteGraph, seed: u64) -> Vec<Edge> {
    let mut non_edges = g.non_edges();
    non_edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    non_edges
}

/// Single pass over the non-edges in seeded order, adding every edge that
/// creates no copy through itself. Whether a non-edge would create a copy only
/// grows as edges are added, so one pass leaves no addable edge behind.
fn add_copy_free_edges(g: &PartiteGraph, seed: u64) -> PartiteGraph {
    let mut out = g.clone();
    for e in shuffled_non_edges(g, seed) {
        if !has_copy_through(&out, e) {
            out.insert(e);
        }
    }
    out
}

/// Extends a partite-free graph to a partite-saturated supergraph.
pub fn greedy_saturate(g: &PartiteGraph, seed: u64) -> Result<PartiteGraph> {
    if has_partite_copy(g) {
        return Err(Error::NotPartiteFree);
    }
    Ok(add_copy_free_edges(g, seed))
}

/// Extends any graph to an extra-saturated supergraph by adding non-edges
/// whose addition leaves the copy count unchanged.
pub fn greedy_extra_saturate(g: &PartiteGraph, seed: u64) -> PartiteGraph {
    add_copy_free_edges(g, seed)
}
