//! Exact `satp` / `exsatp` by iterative deepening on the edge count.
//!
//! For a target `m`, slot subsets of size `m` are generated in increasing
//! slot order (orderly generation, see [`super::symmetry`]). Three prunes
//! apply to every prefix:
//!
//! * saturation only: the prefix must stay partite-free;
//! * every slot skipped so far is a permanent non-edge, and must still be
//!   able to close a copy through itself using the prefix plus all slots not
//!   yet decided;
//! * enough undecided slots must remain to reach `m`.
//!
//! Saturated graphs are exactly the partite-free extra-saturated graphs, so
//! both objectives share the non-edge condition.

use std::time::{Duration, Instant};

use crate::copies::has_copy_through;
use crate::error::{Error, Result};
use crate::graph::PartiteGraph;
use crate::host::{BlowupHost, Edge};
use crate::pattern::PatternGraph;
use crate::solve::greedy::{greedy_extra_saturate, greedy_saturate};
use crate::solve::symmetry::{SlotSymmetry, DEFAULT_GROUP_LIMIT, MAX_SLOTS};
use crate::verify::{is_extra_saturated, is_partite_saturated};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Saturated,
    ExtraSaturated,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::Saturated => "sat",
            Objective::ExtraSaturated => "exsat",
        }
    }

    pub fn holds(self, g: &PartiteGraph) -> bool {
        match self {
            Objective::Saturated => is_partite_saturated(g).is_ok(),
            Objective::ExtraSaturated => is_extra_saturated(g).is_ok(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Wall-clock budget; `None` runs to completion.
    pub budget: Option<Duration>,
    /// Isomorph rejection under index permutations and pattern automorphisms.
    pub symmetry: bool,
    pub group_limit: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            budget: None,
            symmetry: true,
            group_limit: DEFAULT_GROUP_LIMIT,
        }
    }
}

impl SolveOptions {
    pub fn with_budget(budget: Duration) -> Self {
        Self {
            budget: Some(budget),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub objective: Objective,
    /// The optimum, or `None` when the budget ran out first.
    pub value: Option<usize>,
    /// An optimal graph whenever `value` is known.
    pub witness: Option<PartiteGraph>,
    /// Every edge count below this was proven infeasible.
    pub lower_bound: usize,
    /// Best verified graph known, optimal or not.
    pub best_upper: Option<PartiteGraph>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub exhausted_budget: bool,
    /// Group elements used for isomorph rejection (1 when disabled).
    pub group_size: usize,
}

/// Valid starting point for the deepening: a vertex whose part corresponds to
/// a pattern vertex of degree at least 2 cannot be isolated in a
/// (extra-)saturated graph, because an edge added at it would be its only edge
/// in any new copy. Those `k n` vertices need `ceil(k n / 2)` edges.
pub fn degree_lower_bound(pattern: &PatternGraph, n: usize) -> usize {
    let k = (0..pattern.vertex_count()).filter(|&v| pattern.degree(v) >= 2).count();
    (k * n).div_ceil(2)
}

pub fn min_sat_exact(pattern: &PatternGraph, n: usize, options: &SolveOptions) -> Result<SolveResult> {
    solve_exact(pattern, n, Objective::Saturated, options)
}

pub fn min_exsat_exact(pattern: &PatternGraph, n: usize, options: &SolveOptions) -> Result<SolveResult> {
    solve_exact(pattern, n, Objective::ExtraSaturated, options)
}

pub fn solve_exact(
    pattern: &PatternGraph,
    n: usize,
    objective: Objective,
    options: &SolveOptions,
) -> Result<SolveResult> {
    if pattern.edge_count() == 0 {
        return Err(Error::InvalidPattern("pattern has no edges".into()));
    }
    let host = BlowupHost::new(pattern.clone(), n)?;
    if host.slot_count() > MAX_SLOTS {
        return Err(Error::TooLarge(format!(
            "{} slots; the exact solver handles at most {MAX_SLOTS}",
            host.slot_count()
        )));
    }
    let start = Instant::now();
    let deadline = options.budget.map(|b| start + b);

    let empty = PartiteGraph::empty(host.clone());
    let upper = match objective {
        Objective::Saturated => greedy_saturate(&empty, 0)?,
        Objective::ExtraSaturated => greedy_extra_saturate(&empty, 0),
    };
    debug_assert!(objective.holds(&upper));

    let slots = host.slots();
    let symmetry = options
        .symmetry
        .then(|| SlotSymmetry::for_host(&host, &slots, options.group_limit));
    let group_size = symmetry.as_ref().map_or(1, |s| s.len());

    let mut search = Search {
        objective,
        slots,
        symmetry,
        current: empty.clone(),
        optimistic: crate::graph::blow_up(pattern.clone(), n)?,
        excluded: Vec::new(),
        target: 0,
        set: 0,
        nodes: 0,
        deadline,
        timed_out: false,
    };

    let mut lower = degree_lower_bound(pattern, n).min(upper.edge_count());
    while lower <= upper.edge_count() {
        search.target = lower;
        if let Some(witness) = search.run(&empty) {
            return Ok(SolveResult {
                objective,
                value: Some(lower),
                witness: Some(witness.clone()),
                lower_bound: lower,
                best_upper: Some(witness),
                nodes_explored: search.nodes,
                elapsed: start.elapsed(),
                exhausted_budget: false,
                group_size,
            });
        }
        if search.timed_out {
            break;
        }
        lower += 1;
    }
    if !search.timed_out {
        // The greedy graph itself has `upper` edges, so the loop cannot end
        // without a witness unless the budget ran out.
        unreachable!("deepening passed the greedy upper bound without a witness");
    }
    Ok(SolveResult {
        objective,
        value: None,
        witness: None,
        lower_bound: lower,
        best_upper: Some(upper),
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
        exhausted_budget: true,
        group_size,
    })
}

struct Search {
    objective: Objective,
    slots: Vec<Edge>,
    symmetry: Option<SlotSymmetry>,
    /// The chosen prefix.
    current: PartiteGraph,
    /// Host minus every permanently excluded slot.
    optimistic: PartiteGraph,
    excluded: Vec<usize>,
    target: usize,
    set: u128,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search {
    fn run(&mut self, empty: &PartiteGraph) -> Option<PartiteGraph> {
        if self.target == 0 {
            self.nodes += 1;
            return self.objective.holds(empty).then(|| empty.clone());
        }
        self.set = 0;
        self.excluded.clear();
        self.descend(0)
    }

    fn out_of_time(&mut self) -> bool {
        if !self.timed_out && self.nodes % 1024 == 1 {
            if let Some(deadline) = self.deadline {
                self.timed_out = Instant::now() >= deadline;
            }
        }
        self.timed_out
    }

    fn excluded_still_coverable(&self) -> bool {
        self.excluded
            .iter()
            .all(|&s| has_copy_through(&self.optimistic, self.slots[s]))
    }

    fn descend(&mut self, start: usize) -> Option<PartiteGraph> {
        let have = self.current.edge_count();
        let total = self.slots.len();
        let frame_excluded = self.excluded.len();
        let mut found = None;

        for t in start..total {
            if have + (total - t) < self.target {
                break;
            }
            self.nodes += 1;
            if self.out_of_time() {
                break;
            }
            let slot = self.slots[t];
            let set = self.set | 1u128 << t;
            let canonical = self.symmetry.as_ref().is_none_or(|s| s.is_canonical(set));
            let admissible =
                canonical && (self.objective == Objective::ExtraSaturated || !has_copy_through(&self.current, slot));
            if admissible {
                self.current.insert(slot);
                let saved = self.set;
                self.set = set;
                if have + 1 == self.target {
                    if self.objective.holds(&self.current) {
                        found = Some(self.current.clone());
                    }
                } else if self.excluded_still_coverable() {
                    found = self.descend(t + 1);
                }
                self.set = saved;
                self.current.delete(slot);
                if found.is_some() || self.timed_out {
                    break;
                }
            }
            // From here on, slot `t` is a permanent non-edge for the siblings.
            self.optimistic.delete(slot);
            self.excluded.push(t);
            if !self.excluded_still_coverable() {
                break;
            }
        }

        for s in self.excluded.drain(frame_excluded..) {
            self.optimistic.insert(self.slots[s]);
        }
        found
    }
}
