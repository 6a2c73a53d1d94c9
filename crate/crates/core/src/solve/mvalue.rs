//! `m(r, s)`: the fewest vertices of an `r`-partite graph (all parts
//! nonempty) that is `K_s`-free while every `s - 1` parts span a transversal
//! `K_{s-1}`. Also the resulting bounds on `sat(K_r, K_r[n])`.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::host::{Edge, PartiteVertex};
use crate::pattern::BitIter;
use crate::solve::symmetry::{permutations, Odometer, SlotSymmetry, DEFAULT_GROUP_LIMIT, MAX_SLOTS};

#[derive(Clone, Debug)]
pub struct MSearchOptions {
    pub max_vertices: usize,
    pub budget: Option<Duration>,
    pub symmetry: bool,
}

impl Default for MSearchOptions {
    fn default() -> Self {
        Self {
            max_vertices: 12,
            budget: None,
            symmetry: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MWitness {
    pub part_sizes: Vec<usize>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug)]
pub struct MResult {
    pub r: usize,
    pub s: usize,
    /// `None` when `max_vertices` or the budget was reached first.
    pub value: Option<usize>,
    pub witness: Option<MWitness>,
    /// Every total below this was ruled out.
    pub lower_bound: usize,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub exhausted_budget: bool,
}

/// An `r`-partite graph on at most 64 vertices, adjacency as bitmasks.
#[derive(Clone)]
struct SmallGraph {
    part_of: Vec<usize>,
    parts: usize,
    adjacency: Vec<u64>,
}

impl SmallGraph {
    fn new(part_sizes: &[usize]) -> Self {
        let part_of: Vec<usize> = part_sizes
            .iter()
            .enumerate()
            .flat_map(|(p, &size)| std::iter::repeat_n(p, size))
            .collect();
        let adjacency = vec![0; part_of.len()];
        Self {
            part_of,
            parts: part_sizes.len(),
            adjacency,
        }
    }

    fn set(&mut self, a: usize, b: usize, on: bool) {
        if on {
            self.adjacency[a] |= 1 << b;
            self.adjacency[b] |= 1 << a;
        } else {
            self.adjacency[a] &= !(1 << b);
            self.adjacency[b] &= !(1 << a);
        }
    }

    fn part_mask(&self, part: usize) -> u64 {
        self.part_of
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == part)
            .fold(0, |m, (v, _)| m | 1 << v)
    }

    /// Whether `candidates` contains a clique of `size` vertices.
    fn has_clique_in(&self, candidates: u64, size: usize) -> bool {
        if size == 0 {
            return true;
        }
        if (candidates.count_ones() as usize) < size {
            return false;
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.has_clique_in(rest & self.adjacency[v], size - 1) {
                return true;
            }
        }
        false
    }

    fn has_clique(&self, size: usize) -> bool {
        let all = if self.part_of.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.part_of.len()) - 1
        };
        self.has_clique_in(all, size)
    }

    /// Whether the listed parts span a clique with one vertex in each.
    fn has_transversal_clique(&self, parts: &[usize], part_masks: &[u64], candidates: u64) -> bool {
        match parts.split_first() {
            None => true,
            Some((&p, rest)) => BitIter(candidates & part_masks[p])
                .any(|v| self.has_transversal_clique(rest, part_masks, candidates & self.adjacency[v])),
        }
    }

    fn covers(&self, subsets: &[Vec<usize>], part_masks: &[u64]) -> bool {
        subsets
            .iter()
            .all(|parts| self.has_transversal_clique(parts, part_masks, u64::MAX))
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            extend(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Non-increasing compositions of `total` into `parts` positive sizes.
fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn extend(left: usize, parts: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = max.min(left.saturating_sub(parts - 1));
        for size in (1..=hi).rev() {
            cur.push(size);
            extend(left - size, parts - 1, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(total, parts, total, &mut Vec::new(), &mut out);
    out
}

/// Checks the defining property of `m(r, s)` on a witness.
pub fn is_m_witness(witness: &MWitness, s: usize) -> bool {
    let mut g = SmallGraph::new(&witness.part_sizes);
    let offsets: Vec<usize> = witness
        .part_sizes
        .iter()
        .scan(0, |acc, &size| {
            let start = *acc;
            *acc += size;
            Some(start)
        })
        .collect();
    for e in &witness.edges {
        if e.u.part == e.v.part
            || e.u.part >= witness.part_sizes.len()
            || e.v.part >= witness.part_sizes.len()
            || e.u.index >= witness.part_sizes[e.u.part]
            || e.v.index >= witness.part_sizes[e.v.part]
        {
            return false;
        }
        g.set(offsets[e.u.part] + e.u.index, offsets[e.v.part] + e.v.index, true);
    }
    let masks: Vec<u64> = (0..g.parts).map(|p| g.part_mask(p)).collect();
    witness.part_sizes.iter().all(|&size| size >= 1) && !g.has_clique(s) && g.covers(&k_subsets(g.parts, s - 1), &masks)
}

pub fn m_value(r: usize, s: usize, options: &MSearchOptions) -> Result<MResult> {
    if s < 3 || r < s {
        return Err(Error::InvalidArgument(format!(
            "m(r, s) needs r >= s >= 3, got r={r}, s={s}"
        )));
    }
    let start = Instant::now();
    let deadline = options.budget.map(|b| start + b);
    let subsets = k_subsets(r, s - 1);
    let mut nodes = 0u64;
    let mut timed_out = false;

    let mut total = r;
    while total <= options.max_vertices.min(64) {
        for sizes in partitions(total, r) {
            let mut search = PartitionSearch::new(&sizes, s, &subsets, options.symmetry, deadline)?;
            let found = search.run();
            nodes += search.nodes;
            if let Some(witness) = found {
                return Ok(MResult {
                    r,
                    s,
                    value: Some(total),
                    witness: Some(witness),
                    lower_bound: total,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                    exhausted_budget: false,
                });
            }
            if search.timed_out {
                timed_out = true;
                break;
            }
        }
        if timed_out {
            break;
        }
        total += 1;
    }
    Ok(MResult {
        r,
        s,
        value: None,
        witness: None,
        lower_bound: total,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        exhausted_budget: true,
    })
}

struct PartitionSearch<'a> {
    sizes: Vec<usize>,
    s: usize,
    subsets: &'a [Vec<usize>],
    part_masks: Vec<u64>,
    slots: Vec<(usize, usize)>,
    symmetry: Option<SlotSymmetry>,
    graph: SmallGraph,
    set: u128,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<'a> PartitionSearch<'a> {
    fn new(
        sizes: &[usize],
        s: usize,
        subsets: &'a [Vec<usize>],
        symmetry: bool,
        deadline: Option<Instant>,
    ) -> Result<Self> {
        let graph = SmallGraph::new(sizes);
        let v = graph.part_of.len();
        let slots: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
            .filter(|&(a, b)| graph.part_of[a] != graph.part_of[b])
            .collect();
        if slots.len() > MAX_SLOTS {
            return Err(Error::TooLarge(format!(
                "{} vertex pairs for part sizes {sizes:?}; at most {MAX_SLOTS} supported",
                slots.len()
            )));
        }
        let part_masks = (0..sizes.len()).map(|p| graph.part_mask(p)).collect();
        let symmetry =
            symmetry.then(|| SlotSymmetry::from_vertex_maps(v, &slots, partite_maps(sizes), DEFAULT_GROUP_LIMIT));
        Ok(Self {
            sizes: sizes.to_vec(),
            s,
            subsets,
            part_masks,
            slots,
            symmetry,
            graph,
            set: 0,
            nodes: 0,
            deadline,
            timed_out: false,
        })
    }

    fn run(&mut self) -> Option<MWitness> {
        self.nodes += 1;
        if self.graph.covers(self.subsets, &self.part_masks) {
            return Some(self.witness());
        }
        self.descend(0)
    }

    fn witness(&self) -> MWitness {
        let offsets: Vec<usize> = self
            .sizes
            .iter()
            .scan(0, |acc, &size| {
                let start = *acc;
                *acc += size;
                Some(start)
            })
            .collect();
        let vertex = |id: usize| {
            let part = self.graph.part_of[id];
            PartiteVertex::new(part, id - offsets[part])
        };
        let edges = BitIter(self.set as u64)
            .chain(BitIter((self.set >> 64) as u64).map(|b| b + 64))
            .map(|s| {
                let (a, b) = self.slots[s];
                Edge::new(vertex(a), vertex(b))
            })
            .collect();
        MWitness {
            part_sizes: self.sizes.clone(),
            edges,
        }
    }

    /// The prefix plus every slot from `from` on.
    fn optimistic_covers(&self, from: usize) -> bool {
        let mut g = self.graph.clone();
        for &(a, b) in &self.slots[from..] {
            g.set(a, b, true);
        }
        g.covers(self.subsets, &self.part_masks)
    }

    fn descend(&mut self, start: usize) -> Option<MWitness> {
        if !self.optimistic_covers(start) {
            return None;
        }
        for t in start..self.slots.len() {
            self.nodes += 1;
            if self.nodes % 1024 == 1 {
                if let Some(deadline) = self.deadline {
                    self.timed_out = Instant::now() >= deadline;
                }
            }
            if self.timed_out {
                return None;
            }
            let (a, b) = self.slots[t];
            let set = self.set | 1u128 << t;
            if !self.symmetry.as_ref().is_none_or(|sym| sym.is_canonical(set)) {
                continue;
            }
            // A new K_s would have to use the edge ab.
            let common = self.graph.adjacency[a] & self.graph.adjacency[b];
            if self.graph.has_clique_in(common, self.s - 2) {
                continue;
            }
            self.graph.set(a, b, true);
            let saved = self.set;
            self.set = set;
            let found = if self.graph.covers(self.subsets, &self.part_masks) {
                Some(self.witness())
            } else {
                self.descend(t + 1)
            };
            self.set = saved;
            self.graph.set(a, b, false);
            if found.is_some() || self.timed_out {
                return found;
            }
            if !self.optimistic_covers(t + 1) {
                return None;
            }
        }
        None
    }
}

/// Vertex permutations preserving the multipartition: equal-size parts may be
/// swapped and each part's vertices permuted. Identity first.
fn partite_maps(sizes: &[usize]) -> impl Iterator<Item = Vec<usize>> {
    let sizes = sizes.to_vec();
    let parts = sizes.len();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &size| {
            let start = *acc;
            *acc += size;
            Some(start)
        })
        .collect();
    let total: usize = sizes.iter().sum();
    let part_perms: Vec<Vec<usize>> = permutations(parts, DEFAULT_GROUP_LIMIT)
        .into_iter()
        .filter(|perm| (0..parts).all(|p| sizes[perm[p]] == sizes[p]))
        .collect();
    let max_size = sizes.iter().copied().max().unwrap_or(0);
    let index_perms: Vec<Vec<Vec<usize>>> = (0..=max_size).map(|k| permutations(k, DEFAULT_GROUP_LIMIT)).collect();
    part_perms.into_iter().flat_map(move |part_perm| {
        let sizes = sizes.clone();
        let offsets = offsets.clone();
        let index_perms = index_perms.clone();
        Odometer::new(sizes.iter().map(|&size| index_perms[size].len()).collect()).map(move |digits| {
            let mut map = vec![0; total];
            for p in 0..parts {
                let perm = &index_perms[sizes[p]][digits[p]];
                for i in 0..sizes[p] {
                    map[offsets[p] + i] = offsets[part_perm[p]] + perm[i];
                }
            }
            map
        })
    })
}

#[derive(Clone, Debug)]
pub struct KrBounds {
    pub r: usize,
    pub n: usize,
    /// `ceil(m(r-1, r-1) * r * n / 2)`.
    pub lower: Option<usize>,
    /// `m(r, r-1) * (r-1) * n`.
    pub upper: Option<usize>,
    pub lower_m: MResult,
    pub upper_m: MResult,
}

impl KrBounds {
    /// Names of the `m` values that could not be determined.
    pub fn unknown(&self) -> Vec<String> {
        [&self.lower_m, &self.upper_m]
            .into_iter()
            .filter(|m| m.value.is_none())
            .map(|m| format!("m({},{})", m.r, m.s))
            .collect()
    }
}

/// Bounds on `sat(K_r, K_r[n])` from a minimum-degree argument (lower) and
/// from blowing up an `m(r, r-1)` witness (upper).
pub fn kr_sat_bounds(r: usize, n: usize, options: &MSearchOptions) -> Result<KrBounds> {
    if r < 4 {
        return Err(Error::InvalidArgument(format!("K_r bounds need r >= 4, got {r}")));
    }
    // One budget covers both searches.
    let lower_m = m_value(r - 1, r - 1, options)?;
    let rest = MSearchOptions {
        budget: options.budget.map(|b| b.saturating_sub(lower_m.elapsed)),
        ..options.clone()
    };
    let upper_m = m_value(r, r - 1, &rest)?;
    Ok(KrBounds {
        r,
        n,
        lower: lower_m.value.map(|m| (m * r * n).div_ceil(2)),
        upper: upper_m.value.map(|m| m * (r - 1) * n),
        lower_m,
        upper_m,
    })
}
