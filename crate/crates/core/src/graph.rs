//! Subgraphs of a blow-up host, stored as per-part neighbour bitsets.

use std::fmt;

use crate::error::{Error, Result};
use crate::host::{BlowupHost, Edge, PartiteVertex};
use crate::pattern::{BitIter, PatternGraph};

/// A subgraph `G` of `H[n]`. Every stored edge occupies an allowed slot.
///
/// For each vertex and each part we keep a bitset of neighbour indices in that
/// part, so candidate sets during copy enumeration are word-wise ANDs.
#[derive(Clone, PartialEq, Eq)]
pub struct PartiteGraph {
    host: BlowupHost,
    words: usize,
    adjacency: Vec<u64>,
    edge_count: usize,
}

impl PartiteGraph {
    pub fn empty(host: BlowupHost) -> Self {
        let words = host.n().div_ceil(64);
        let adjacency = vec![0; host.vertex_count() * host.parts() * words];
        Self {
            host,
            words,
            adjacency,
            edge_count: 0,
        }
    }

    pub fn from_edges(host: BlowupHost, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Self::empty(host);
        for e in edges {
            if !g.add_edge(e.u, e.v)? {
                return Err(Error::InvalidArgument(format!("duplicate edge {e}")));
            }
        }
        Ok(g)
    }

    pub fn host(&self) -> &BlowupHost {
        &self.host
    }

    pub fn pattern(&self) -> &PatternGraph {
        self.host.pattern()
    }

    pub fn n(&self) -> usize {
        self.host.n()
    }

    pub fn parts(&self) -> usize {
        self.host.parts()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    fn row(&self, v: PartiteVertex, part: usize) -> usize {
        (self.host.vertex_id(v) * self.host.parts() + part) * self.words
    }

    /// Neighbours of `v` inside `part`, as bitset words over indices.
    pub(crate) fn neighbor_words(&self, v: PartiteVertex, part: usize) -> &[u64] {
        let start = self.row(v, part);
        &self.adjacency[start..start + self.words]
    }

    pub fn neighbors_in(&self, v: PartiteVertex, part: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbor_words(v, part)
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
    }

    pub fn neighbors(&self, v: PartiteVertex) -> impl Iterator<Item = PartiteVertex> + '_ {
        self.pattern()
            .neighbors(v.part)
            .flat_map(move |q| self.neighbors_in(v, q).map(move |i| PartiteVertex::new(q, i)))
    }

    fn check_slot(&self, a: PartiteVertex, b: PartiteVertex) -> Result<()> {
        self.host.check_vertex(a)?;
        self.host.check_vertex(b)?;
        if !self.host.allows(a, b) {
            return Err(Error::DisallowedSlot(format!("{a} {b}")));
        }
        Ok(())
    }

    pub fn has_edge(&self, a: PartiteVertex, b: PartiteVertex) -> bool {
        if !self.host.allows(a, b) {
            return false;
        }
        self.neighbor_words(a, b.part)[b.index / 64] >> (b.index % 64) & 1 == 1
    }

    fn set_bit(&mut self, a: PartiteVertex, b: PartiteVertex, on: bool) {
        let i = self.row(a, b.part) + b.index / 64;
        let mask = 1u64 << (b.index % 64);
        if on {
            self.adjacency[i] |= mask;
        } else {
            self.adjacency[i] &= !mask;
        }
    }

    /// Adds `a`–`b`; returns whether it was new.
    pub fn add_edge(&mut self, a: PartiteVertex, b: PartiteVertex) -> Result<bool> {
        self.check_slot(a, b)?;
        if self.has_edge(a, b) {
            return Ok(false);
        }
        self.set_bit(a, b, true);
        self.set_bit(b, a, true);
        self.edge_count += 1;
        Ok(true)
    }

    /// Removes `a`–`b`; returns whether it was present.
    pub fn remove_edge(&mut self, a: PartiteVertex, b: PartiteVertex) -> Result<bool> {
        self.check_slot(a, b)?;
        if !self.has_edge(a, b) {
            return Ok(false);
        }
        self.set_bit(a, b, false);
        self.set_bit(b, a, false);
        self.edge_count -= 1;
        Ok(true)
    }

    /// Insert for slots already known to be allowed.
    pub(crate) fn insert(&mut self, e: Edge) {
        if !self.has_edge(e.u, e.v) {
            self.set_bit(e.u, e.v, true);
            self.set_bit(e.v, e.u, true);
            self.edge_count += 1;
        }
    }

    pub(crate) fn delete(&mut self, e: Edge) {
        if self.has_edge(e.u, e.v) {
            self.set_bit(e.u, e.v, false);
            self.set_bit(e.v, e.u, false);
            self.edge_count -= 1;
        }
    }

    pub fn with_edge(&self, e: Edge) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(e.u, e.v)?;
        Ok(g)
    }

    pub fn degree(&self, v: PartiteVertex) -> Result<usize> {
        self.host.check_vertex(v)?;
        Ok(self.degree_unchecked(v))
    }

    pub(crate) fn degree_unchecked(&self, v: PartiteVertex) -> usize {
        let start = self.row(v, 0);
        self.adjacency[start..start + self.parts() * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Minimum degree over the `n` vertices of each part.
    pub fn min_degree_per_part(&self) -> Vec<usize> {
        (0..self.parts())
            .map(|p| {
                (0..self.n())
                    .map(|i| self.degree_unchecked(PartiteVertex::new(p, i)))
                    .min()
                    .unwrap_or(0)
            })
            .collect()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.host
            .slots()
            .into_iter()
            .filter(|e| self.has_edge(e.u, e.v))
            .collect()
    }

    /// Allowed slots not in the graph, lexicographically ordered.
    pub fn non_edges(&self) -> Vec<Edge> {
        self.host
            .slots()
            .into_iter()
            .filter(|e| !self.has_edge(e.u, e.v))
            .collect()
    }

    pub fn is_subgraph_of(&self, other: &PartiteGraph) -> bool {
        self.host == other.host && self.adjacency.iter().zip(&other.adjacency).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for PartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartiteGraph({:?}, {} edges)", self.host, self.edge_count)
    }
}

/// The complete host `H[n]` as a graph.
pub fn blow_up(pattern: PatternGraph, n: usize) -> Result<PartiteGraph> {
    let host = BlowupHost::new(pattern, n)?;
    let slots = host.slots();
    let mut g = PartiteGraph::empty(host);
    for e in slots {
        g.insert(e);
    }
    Ok(g)
}
