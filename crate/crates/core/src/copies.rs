//! Partite copies of the pattern inside a subgraph of `H[n]`.
//!
//! A partite copy is a transversal (one index per part) whose chosen vertices
//! carry every pattern edge. Since `G` lives inside `H[n]`, the identity part
//! mapping is the only one that can carry all `e(H)` edges, so copies are
//! exactly such transversals.
//!
//! Enumeration backtracks over parts in ascending order. The candidates for a
//! part are the indices adjacent to every already-placed neighbouring part,
//! computed as an AND of neighbour bitsets.

use num_bigint::BigUint;

use crate::graph::PartiteGraph;
use crate::host::{Edge, PartiteSelection, PartiteVertex};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Count,
    Exists,
}

struct Enumerator<'g> {
    g: &'g PartiteGraph,
    mode: Mode,
    /// Parts still to place, ascending.
    order: Vec<usize>,
    choice: Vec<Option<usize>>,
    scratch: Vec<u64>,
    count: u128,
    found: Option<Vec<usize>>,
}

impl<'g> Enumerator<'g> {
    fn new(g: &'g PartiteGraph, mode: Mode, fixed: &[PartiteVertex]) -> Self {
        let mut choice = vec![None; g.parts()];
        for v in fixed {
            choice[v.part] = Some(v.index);
        }
        let order: Vec<usize> = (0..g.parts()).filter(|&p| choice[p].is_none()).collect();
        let scratch = vec![0; order.len() * g.words()];
        Self {
            g,
            mode,
            order,
            choice,
            scratch,
            count: 0,
            found: None,
        }
    }

    fn run(mut self) -> Self {
        self.descend(0);
        self
    }

    /// Returns `true` when the search should stop.
    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            self.count += 1;
            if self.mode == Mode::Exists {
                self.found = Some(self.choice.iter().map(|c| c.unwrap()).collect());
                return true;
            }
            return false;
        }
        let part = self.order[depth];
        let words = self.g.words();
        let n = self.g.n();
        let base = depth * words;
        for w in 0..words {
            let remaining = n - w * 64;
            self.scratch[base + w] = if remaining >= 64 {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        let mut empty = false;
        for q in self.g.pattern().neighbors(part) {
            if let Some(idx) = self.choice[q] {
                let row = self.g.neighbor_words(PartiteVertex::new(q, idx), part);
                let mut any = 0;
                for (cell, &mask) in self.scratch[base..base + words].iter_mut().zip(row) {
                    *cell &= mask;
                    any |= *cell;
                }
                if any == 0 {
                    empty = true;
                    break;
                }
            }
        }
        if empty {
            return false;
        }
        if self.mode == Mode::Count && depth + 1 == self.order.len() {
            self.count += self.scratch[base..base + words]
                .iter()
                .map(|w| w.count_ones() as u128)
                .sum::<u128>();
            return false;
        }
        for w in 0..words {
            let mut bits = self.scratch[base + w];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.choice[part] = Some(w * 64 + b);
                if self.descend(depth + 1) {
                    return true;
                }
            }
        }
        self.choice[part] = None;
        false
    }
}

pub fn count_partite_copies(g: &PartiteGraph) -> BigUint {
    BigUint::from(Enumerator::new(g, Mode::Count, &[]).run().count)
}

/// Short-circuits on the first copy.
pub fn has_partite_copy(g: &PartiteGraph) -> bool {
    find_partite_copy(g).is_some()
}

pub fn find_partite_copy(g: &PartiteGraph) -> Option<PartiteSelection> {
    Enumerator::new(g, Mode::Exists, &[])
        .run()
        .found
        .map(|choice| PartiteSelection { choice })
}

/// Whether `selection` is a transversal of `g`'s parts carrying every pattern
/// edge.
pub fn carries_pattern(g: &PartiteGraph, selection: &PartiteSelection) -> bool {
    selection.choice.len() == g.parts()
        && selection.choice.iter().all(|&i| i < g.n())
        && g.pattern().edges().iter().all(|&(i, j)| {
            g.has_edge(
                PartiteVertex::new(i, selection.choice[i]),
                PartiteVertex::new(j, selection.choice[j]),
            )
        })
}

/// Number of copies in `g + e` that use `e`, i.e. the increase in copy count
/// from adding the allowed non-edge `e`. The edge `e` itself need not be in
/// `g`; it is treated as present.
pub fn count_copies_through(g: &PartiteGraph, e: Edge) -> BigUint {
    BigUint::from(count_copies_through_u128(g, e))
}

pub(crate) fn count_copies_through_u128(g: &PartiteGraph, e: Edge) -> u128 {
    debug_assert!(g.host().allows(e.u, e.v));
    Enumerator::new(g, Mode::Count, &[e.u, e.v]).run().count
}

/// Whether adding `e` to `g` would create a copy using `e`.
pub fn has_copy_through(g: &PartiteGraph, e: Edge) -> bool {
    find_copy_through(g, e).is_some()
}

pub fn find_copy_through(g: &PartiteGraph, e: Edge) -> Option<PartiteSelection> {
    debug_assert!(g.host().allows(e.u, e.v));
    Enumerator::new(g, Mode::Exists, &[e.u, e.v])
        .run()
        .found
        .map(|choice| PartiteSelection { choice })
}
