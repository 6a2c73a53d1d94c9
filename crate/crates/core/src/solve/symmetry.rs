//! Isomorph rejection for searches over edge subsets.
//!
//! A subset of slots is a `u128` bitmask. Sets are compared by their sorted
//! slot sequence, lexicographically; for equal-size sets that is decided by
//! the lowest slot in the symmetric difference. A set is canonical when no
//! group element maps it to a smaller set.
//!
//! Orderly generation relies on: if `g(P) < P` then `g(P + x) < P + x` for
//! any `x` above every slot of `P`. So prefixes of canonical sets are
//! canonical and a search that appends slots in increasing order may discard
//! non-canonical prefixes. The same holds for any subset of the group that
//! contains the identity, which is what lets [`SlotSymmetry`] truncate large
//! groups without losing completeness.

use crate::host::{BlowupHost, Edge};

pub(crate) const MAX_SLOTS: usize = 128;

/// Default cap on the number of stored group elements.
pub const DEFAULT_GROUP_LIMIT: usize = 100_000;

pub(crate) struct SlotSymmetry {
    slots: usize,
    /// Row `k` is the slot permutation of group element `k + 1`; the identity
    /// is implicit.
    perms: Vec<u8>,
}

impl SlotSymmetry {
    /// Builds slot permutations from vertex permutations. `slot_pairs` lists
    /// each slot as a pair of vertex ids; `maps` must start with the identity
    /// and every map must send slots to slots.
    pub(crate) fn from_vertex_maps(
        vertex_count: usize,
        slot_pairs: &[(usize, usize)],
        maps: impl IntoIterator<Item = Vec<usize>>,
        limit: usize,
    ) -> Self {
        assert!(slot_pairs.len() <= MAX_SLOTS);
        let mut lookup = vec![u8::MAX; vertex_count * vertex_count];
        for (s, &(a, b)) in slot_pairs.iter().enumerate() {
            lookup[a * vertex_count + b] = s as u8;
            lookup[b * vertex_count + a] = s as u8;
        }
        let mut perms = Vec::new();
        for map in maps.into_iter().skip(1).take(limit.saturating_sub(1)) {
            for &(a, b) in slot_pairs {
                let image = lookup[map[a] * vertex_count + map[b]];
                debug_assert!(image != u8::MAX, "vertex map does not preserve slots");
                perms.push(image);
            }
        }
        Self {
            slots: slot_pairs.len(),
            perms,
        }
    }

    /// Pattern automorphisms combined with independent index permutations of
    /// every part.
    pub(crate) fn for_host(host: &BlowupHost, slots: &[Edge], limit: usize) -> Self {
        let n = host.n();
        let parts = host.parts();
        let autos = host.pattern().automorphisms(limit);
        let index_perms = permutations(n, limit);
        let pairs: Vec<(usize, usize)> = slots
            .iter()
            .map(|e| (host.vertex_id(e.u), host.vertex_id(e.v)))
            .collect();
        let maps = autos.into_iter().flat_map(move |auto| {
            let index_perms = index_perms.clone();
            Odometer::new(vec![index_perms.len(); parts]).map(move |digits| {
                let mut map = vec![0; parts * n];
                for p in 0..parts {
                    let perm = &index_perms[digits[p]];
                    for a in 0..n {
                        map[p * n + a] = auto[p] * n + perm[a];
                    }
                }
                map
            })
        });
        Self::from_vertex_maps(host.vertex_count(), &pairs, maps, limit)
    }

    /// Stored group elements, identity included.
    pub(crate) fn len(&self) -> usize {
        1 + self.perms.len() / self.slots.max(1)
    }

    pub(crate) fn is_canonical(&self, set: u128) -> bool {
        if self.slots == 0 {
            return true;
        }
        for perm in self.perms.chunks_exact(self.slots) {
            let mut image = 0u128;
            let mut bits = set;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                image |= 1u128 << perm[b];
            }
            let diff = image ^ set;
            if diff != 0 && image >> diff.trailing_zeros() & 1 == 1 {
                return false;
            }
        }
        true
    }
}

/// All permutations of `0..n` (identity first), at most `limit`.
pub(crate) fn permutations(n: usize, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(n);
    fn extend(n: usize, used: &mut Vec<bool>, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                current.push(x);
                extend(n, used, current, out, limit);
                current.pop();
                used[x] = false;
            }
        }
    }
    extend(n, &mut vec![false; n], &mut current, &mut out, limit);
    out
}

/// Counts through all digit vectors where digit `k` ranges over
/// `0..radices[k]`, starting at all zeros.
pub(crate) struct Odometer {
    digits: Vec<usize>,
    radices: Vec<usize>,
    done: bool,
}

impl Odometer {
    pub(crate) fn new(radices: Vec<usize>) -> Self {
        Self {
            digits: vec![0; radices.len()],
            done: radices.contains(&0),
            radices,
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.digits.clone();
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(out)
    }
}
