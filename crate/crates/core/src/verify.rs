//! Partite-freeness, saturation and extra-saturation checks with
//! certificates, plus structural diagnostics for saturated subgraphs of
//! `K4[n]`.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::copies::{count_partite_copies, find_partite_copy, has_copy_through};
use crate::error::{Error, Result};
use crate::graph::PartiteGraph;
use crate::host::{Edge, PartiteSelection, PartiteVertex};

/// Below this many non-edges the scan stays on the calling thread.
const PARALLEL_SCAN_THRESHOLD: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    NotFree,
    NotSaturated,
    NotExtraSaturated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::NotFree => "not_free",
            Status::NotSaturated => "not_saturated",
            Status::NotExtraSaturated => "not_extra_saturated",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A partite copy present in the graph.
    Copy(PartiteSelection),
    /// An allowed non-edge whose addition creates no new copy.
    NonEdge(Edge),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub baseline_count: Option<BigUint>,
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    fn ok(baseline_count: Option<BigUint>) -> Self {
        Self {
            status: Status::Ok,
            witness: None,
            baseline_count,
        }
    }
}

/// The lexicographically least allowed non-edge `e` for which `fails(e)`.
fn first_failing_non_edge<F>(g: &PartiteGraph, fails: F) -> Option<Edge>
where
    F: Fn(Edge) -> bool + Sync,
{
    let non_edges = g.non_edges();
    if non_edges.len() >= PARALLEL_SCAN_THRESHOLD && rayon::current_num_threads() > 1 {
        non_edges.par_iter().copied().find_first(|&e| fails(e))
    } else {
        non_edges.into_iter().find(|&e| fails(e))
    }
}

pub fn is_partite_free(g: &PartiteGraph) -> Verdict {
    match find_partite_copy(g) {
        None => Verdict::ok(Some(BigUint::from(0u32))),
        Some(sel) => Verdict {
            status: Status::NotFree,
            witness: Some(Witness::Copy(sel)),
            baseline_count: Some(count_partite_copies(g)),
        },
    }
}

pub fn is_partite_saturated(g: &PartiteGraph) -> Verdict {
    if let Some(sel) = find_partite_copy(g) {
        return Verdict {
            status: Status::NotFree,
            witness: Some(Witness::Copy(sel)),
            baseline_count: None,
        };
    }
    match first_failing_non_edge(g, |e| !has_copy_through(g, e)) {
        None => Verdict::ok(Some(BigUint::from(0u32))),
        Some(e) => Verdict {
            status: Status::NotSaturated,
            witness: Some(Witness::NonEdge(e)),
            baseline_count: Some(BigUint::from(0u32)),
        },
    }
}

/// Every new copy created by adding `uv` passes through `uv`, so the count
/// strictly increases iff some copy of `G + uv` uses `uv`.
pub fn is_extra_saturated(g: &PartiteGraph) -> Verdict {
    let baseline = count_partite_copies(g);
    match first_failing_non_edge(g, |e| !has_copy_through(g, e)) {
        None => Verdict::ok(Some(baseline)),
        Some(e) => Verdict {
            status: Status::NotExtraSaturated,
            witness: Some(Witness::NonEdge(e)),
            baseline_count: Some(baseline),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail { vertex: PartiteVertex, reason: String },
    NotApplicable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub outcome: CheckOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K4LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl K4LemmaReport {
    /// No check failed (inapplicable checks are fine).
    pub fn all_pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.outcome, CheckOutcome::Fail { .. }))
    }

    pub fn outcome(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.outcome)
    }
}

pub const CHECK_MIN_DEGREE: &str = "min_degree_at_least_4";
pub const CHECK_DEGREE4_NEIGHBORHOOD: &str = "degree4_neighborhood_path";
pub const CHECK_DEGREE4_PARTS: &str = "at_most_two_parts_with_min_degree_4";

/// Structural consequences every `(K4, K4[n])`-saturated graph must satisfy:
///
/// * `n >= 2`: minimum degree at least 4.
/// * `n >= 3`: a degree-4 vertex has neighbour profile `{2, 1, 1}` over the
///   other parts, its neighbourhood induces a path whose ends are the two
///   neighbours sharing a part, and every neighbour has degree at least `n - 2`.
/// * `n >= 22`: at most two parts have minimum degree exactly 4.
///
/// Checks below their threshold report `NotApplicable`.
pub fn check_k4_lemmas(g: &PartiteGraph) -> Result<K4LemmaReport> {
    let pattern = g.pattern();
    if pattern.vertex_count() != 4 || !pattern.is_complete() {
        return Err(Error::NotK4);
    }
    if !is_partite_saturated(g).is_ok() {
        return Err(Error::NotSaturated);
    }
    let n = g.n();
    let vertices: Vec<PartiteVertex> = (0..4)
        .flat_map(|p| (0..n).map(move |i| PartiteVertex::new(p, i)))
        .collect();
    let degree = |v: PartiteVertex| g.degree_unchecked(v);

    let min_degree = if n < 2 {
        CheckOutcome::NotApplicable {
            reason: "requires n >= 2".into(),
        }
    } else {
        match vertices.iter().find(|&&v| degree(v) < 4) {
            None => CheckOutcome::Pass,
            Some(&v) => CheckOutcome::Fail {
                vertex: v,
                reason: format!("degree {}", degree(v)),
            },
        }
    };

    let neighborhood = if n < 3 {
        CheckOutcome::NotApplicable {
            reason: "requires n >= 3".into(),
        }
    } else {
        vertices
            .iter()
            .filter(|&&v| degree(v) == 4)
            .find_map(|&v| degree4_violation(g, v).map(|reason| CheckOutcome::Fail { vertex: v, reason }))
            .unwrap_or(CheckOutcome::Pass)
    };

    let parts = if n < 22 {
        CheckOutcome::NotApplicable {
            reason: "requires n >= 22".into(),
        }
    } else {
        let low: Vec<usize> = g
            .min_degree_per_part()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 4)
            .map(|(p, _)| p)
            .collect();
        if low.len() <= 2 {
            CheckOutcome::Pass
        } else {
            let part = low[2];
            let index = (0..n).find(|&i| degree(PartiteVertex::new(part, i)) == 4).unwrap();
            CheckOutcome::Fail {
                vertex: PartiteVertex::new(part, index),
                reason: format!("{} parts have minimum degree 4", low.len()),
            }
        }
    };

    Ok(K4LemmaReport {
        checks: vec![
            LemmaCheck {
                name: CHECK_MIN_DEGREE,
                outcome: min_degree,
            },
            LemmaCheck {
                name: CHECK_DEGREE4_NEIGHBORHOOD,
                outcome: neighborhood,
            },
            LemmaCheck {
                name: CHECK_DEGREE4_PARTS,
                outcome: parts,
            },
        ],
    })
}

fn degree4_violation(g: &PartiteGraph, v: PartiteVertex) -> Option<String> {
    let nbrs: Vec<PartiteVertex> = g.neighbors(v).collect();
    let mut profile: Vec<usize> = (0..4)
        .filter(|&p| p != v.part)
        .map(|p| nbrs.iter().filter(|w| w.part == p).count())
        .collect();
    profile.sort_unstable();
    if profile != [1, 1, 2] {
        return Some(format!("neighbour profile {profile:?} is not {{2,1,1}}"));
    }
    let induced_degree = |w: PartiteVertex| nbrs.iter().filter(|&&x| g.has_edge(w, x)).count();
    let induced_edges: usize = nbrs.iter().map(|&w| induced_degree(w)).sum::<usize>() / 2;
    let doubled = nbrs
        .iter()
        .find(|w| nbrs.iter().filter(|x| x.part == w.part).count() == 2)
        .unwrap()
        .part;
    // Four vertices, three edges, degree sequence (1, 2, 2, 1) is a path.
    let path_ok = induced_edges == 3
        && nbrs.iter().all(|&w| {
            let want = if w.part == doubled { 1 } else { 2 };
            induced_degree(w) == want
        });
    if !path_ok {
        return Some("neighbourhood does not induce a path ending in the shared part".into());
    }
    let floor = g.n().saturating_sub(2);
    if let Some(&w) = nbrs.iter().find(|&&w| g.degree_unchecked(w) < floor) {
        return Some(format!("neighbour {w} has degree {} < n - 2", g.degree_unchecked(w)));
    }
    None
}
