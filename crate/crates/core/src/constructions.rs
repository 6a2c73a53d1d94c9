//! Generators for the extremal constructions, together with the closed-form
//! values they attain.
//!
//! Distinguished vertices sit at index 0 (and index 1 for the second
//! distinguished vertex of a part).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::PartiteGraph;
use crate::host::{BlowupHost, Edge, PartiteVertex};
use crate::pattern::PatternGraph;
use crate::solve::greedy_saturate;

fn v(part: usize, index: usize) -> PartiteVertex {
    PartiteVertex::new(part, index)
}

fn e(a: PartiteVertex, b: PartiteVertex) -> Edge {
    Edge::new(a, b)
}

/// The eight distinguished vertices `x_i = (i, 0)`, `x_i' = (i, 1)` of the
/// `K4[n]` construction and the fifteen edges among them.
const K4_CORE_EDGES: [((usize, usize), (usize, usize)); 15] = [
    ((0, 0), (1, 0)),
    ((0, 0), (1, 1)),
    ((0, 0), (2, 1)),
    ((0, 0), (3, 1)),
    ((0, 1), (1, 1)),
    ((0, 1), (2, 0)),
    ((0, 1), (3, 0)),
    ((1, 0), (2, 0)),
    ((1, 0), (3, 0)),
    ((1, 0), (3, 1)),
    ((1, 1), (2, 1)),
    ((1, 1), (3, 0)),
    ((2, 0), (3, 1)),
    ((2, 1), (3, 0)),
    ((2, 1), (3, 1)),
];

/// Distinguished vertices joined to every non-distinguished vertex of each
/// part, as `(part, index)`.
const K4_ATTACHMENTS: [&[(usize, usize)]; 4] = [
    &[(1, 0), (2, 0), (2, 1), (3, 0)],
    &[(0, 1), (2, 0), (2, 1), (3, 0), (3, 1)],
    &[(0, 0), (0, 1), (1, 0), (3, 0)],
    &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)],
];

/// The `K4[n]`-saturated graph with `18n - 21` edges. Requires `n >= 2`;
/// saturation only holds from `n = 3` on.
pub fn k4_construction(n: usize) -> Result<PartiteGraph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("k4 construction needs n >= 2, got {n}")));
    }
    let host = BlowupHost::new(PatternGraph::complete(4)?, n)?;
    let mut g = PartiteGraph::empty(host);
    for ((p, a), (q, b)) in K4_CORE_EDGES {
        g.insert(e(v(p, a), v(q, b)));
    }
    for (part, attached) in K4_ATTACHMENTS.iter().enumerate() {
        for index in 2..n {
            for &(q, b) in attached.iter() {
                g.insert(e(v(part, index), v(q, b)));
            }
        }
    }
    Ok(g)
}

/// `K_{1,r}[n]` with every centre vertex joined to all of leaf parts
/// `1..r-1` and to nothing in leaf part `r`.
pub fn star_construction(r: usize, n: usize) -> Result<PartiteGraph> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "star construction needs r >= 2, got {r}"
        )));
    }
    let host = BlowupHost::new(PatternGraph::star(r)?, n)?;
    let mut g = PartiteGraph::empty(host);
    for c in 0..n {
        for leaf in 1..r {
            for i in 0..n {
                g.insert(e(v(0, c), v(leaf, i)));
            }
        }
    }
    Ok(g)
}

/// Size of the set `A_i` for part `i` (1-based) of the `P_r[n]` construction.
fn path_a_size(r: usize, n: usize, i: usize) -> usize {
    if i == 1 {
        n
    } else if i == r {
        0
    } else if r % 2 == 1 && i == r - 1 {
        n - 1
    } else if i.is_multiple_of(2) {
        1
    } else {
        n - 1
    }
}

/// `P_r[n]` construction: with `A_i` the first `|A_i|` indices of part `i`,
/// keep exactly the edges in `(A_i, A_{i+1})` and `(X_i \ A_i, X_{i+1})`.
/// The edge count matches [`path_sat_value`]; saturation is claimed for
/// `n >= 2r`.
pub fn path_construction(r: usize, n: usize) -> Result<PartiteGraph> {
    if r < 4 {
        return Err(Error::InvalidArgument(format!(
            "path construction needs r >= 4, got {r}"
        )));
    }
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "path construction needs n >= 2, got {n}"
        )));
    }
    let host = BlowupHost::new(PatternGraph::path(r)?, n)?;
    let mut g = PartiteGraph::empty(host);
    for part in 0..r - 1 {
        let a_here = path_a_size(r, n, part + 1);
        let a_next = path_a_size(r, n, part + 2);
        for a in 0..n {
            let targets = if a < a_here { 0..a_next } else { 0..n };
            for b in targets {
                g.insert(e(v(part, a), v(part + 1, b)));
            }
        }
    }
    Ok(g)
}

/// The three stages of the upper-bound construction for 2-connected patterns.
#[derive(Clone, Debug)]
pub struct TwoConnectedStages {
    /// Disjoint copies of `H_ij`, one per pattern edge.
    pub g1: PartiteGraph,
    /// `g1` plus the attachment edges; partite-free.
    pub g2: PartiteGraph,
    /// `g2` greedily completed to a saturated graph.
    pub g3: PartiteGraph,
}

/// Pattern edge `k` (in sorted order) gets index block `k`: its copy of
/// `H_ij` (the pattern minus every edge touching `i` or `j`) uses index `k`
/// in every part. Each vertex of the copy that was adjacent to `i` in `H`
/// (other than `i`, `j`) is joined to all of `X_i` outside the blocks, and
/// likewise for `j`. The result is completed with [`greedy_saturate`].
pub fn two_connected_upper(pattern: &PatternGraph, n: usize, seed: u64) -> Result<TwoConnectedStages> {
    if !pattern.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let blocks = pattern.edge_count();
    if n < blocks {
        return Err(Error::InvalidArgument(format!(
            "two-connected construction needs n >= e(H) = {blocks}, got {n}"
        )));
    }
    let host = BlowupHost::new(pattern.clone(), n)?;
    let mut g1 = PartiteGraph::empty(host);
    for (k, &(i, j)) in pattern.edges().iter().enumerate() {
        for &(a, b) in pattern.edges() {
            if a != i && a != j && b != i && b != j {
                g1.insert(e(v(a, k), v(b, k)));
            }
        }
    }
    let mut g2 = g1.clone();
    for (k, &(i, j)) in pattern.edges().iter().enumerate() {
        for (end, other) in [(i, j), (j, i)] {
            for w in pattern.neighbors(end).filter(|&w| w != other) {
                for outside in blocks..n {
                    g2.insert(e(v(w, k), v(end, outside)));
                }
            }
        }
    }
    let g3 = greedy_saturate(&g2, seed)?;
    Ok(TwoConnectedStages { g1, g2, g3 })
}

/// A copy of `K_r` on index 0, each clique vertex joined to every vertex of
/// the other parts.
pub fn clique_exsat_construction(r: usize, n: usize) -> Result<PartiteGraph> {
    if r < 3 {
        return Err(Error::InvalidArgument(format!(
            "clique construction needs r >= 3, got {r}"
        )));
    }
    generic_exsat_construction(&PatternGraph::complete(r)?, n)
}

/// A copy of `H` on index 0, each of its vertices joined to every vertex of
/// the adjacent parts: `(2n - 1) e(H)` edges.
pub fn generic_exsat_construction(pattern: &PatternGraph, n: usize) -> Result<PartiteGraph> {
    if pattern.edge_count() == 0 {
        return Err(Error::InvalidPattern("pattern has no edges".into()));
    }
    let host = BlowupHost::new(pattern.clone(), n)?;
    let mut g = PartiteGraph::empty(host);
    for &(i, j) in pattern.edges() {
        for idx in 0..n {
            g.insert(e(v(i, 0), v(j, idx)));
            g.insert(e(v(i, idx), v(j, 0)));
        }
    }
    Ok(g)
}

/// `n` disjoint partite copies of the tree, copy `k` on index `k`.
pub fn tree_exsat_construction(tree: &PatternGraph, n: usize) -> Result<PartiteGraph> {
    if !tree.is_tree() || tree.vertex_count() < 3 {
        return Err(Error::NotATree);
    }
    let host = BlowupHost::new(tree.clone(), n)?;
    let mut g = PartiteGraph::empty(host);
    for k in 0..n {
        for &(i, j) in tree.edges() {
            g.insert(e(v(i, k), v(j, k)));
        }
    }
    Ok(g)
}

pub fn k4_sat_value(n: usize) -> i64 {
    18 * n as i64 - 21
}

pub fn star_sat_value(r: usize, n: usize) -> i64 {
    ((r - 1) * n * n) as i64
}

/// Closed form for `P_r[n]`, valid for `r >= 4`, `n >= 2r`.
pub fn path_sat_value(r: usize, n: usize) -> i64 {
    let (r, n) = (r as i64, n as i64);
    if r % 2 == 0 {
        (r / 2 - 1) * n * n + (r - 2) * n + 3 - r
    } else {
        (r - 1) / 2 * n * n + (r - 4) * n + 5 - r
    }
}

pub fn clique_exsat_value(r: usize, n: usize) -> i64 {
    ((2 * n - 1) * r * (r - 1) / 2) as i64
}

pub fn generic_exsat_bound(pattern: &PatternGraph, n: usize) -> i64 {
    ((2 * n - 1) * pattern.edge_count()) as i64
}

pub fn tree_exsat_value(tree: &PatternGraph, n: usize) -> i64 {
    ((tree.vertex_count() - 1) * n) as i64
}

/// `2 e(H)^2 n - e(H)^3`.
pub fn two_connected_bound(pattern: &PatternGraph, n: usize) -> i64 {
    let e = pattern.edge_count() as i64;
    2 * e * e * n as i64 - e * e * e
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    K4,
    Star,
    Path,
    TwoConnected,
    CliqueExsat,
    GenericExsat,
    TreeExsat,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::K4,
        Family::Star,
        Family::Path,
        Family::TwoConnected,
        Family::CliqueExsat,
        Family::GenericExsat,
        Family::TreeExsat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::K4 => "k4",
            Family::Star => "star",
            Family::Path => "path",
            Family::TwoConnected => "two-connected",
            Family::CliqueExsat => "clique-exsat",
            Family::GenericExsat => "generic-exsat",
            Family::TreeExsat => "tree-exsat",
        }
    }

    /// Whether the family targets extra-saturation rather than saturation.
    pub fn is_exsat(self) -> bool {
        matches!(self, Family::CliqueExsat | Family::GenericExsat | Family::TreeExsat)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == normalized)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

/// Everything needed to dispatch one generator.
#[derive(Clone, Debug)]
pub struct ConstructionSpec {
    pub family: Family,
    pub n: usize,
    /// Clique/star/path size for the families parameterised by `r`.
    pub r: Option<usize>,
    /// Pattern for the two-connected, generic and tree families.
    pub pattern: Option<PatternGraph>,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub family: Family,
    pub graph: PartiteGraph,
    /// Closed-form edge count (or upper bound for `two-connected`).
    pub formula: i64,
    /// Caveats, e.g. parameters outside the range where saturation is claimed.
    pub flags: Vec<String>,
}

impl ConstructionSpec {
    fn need_r(&self) -> Result<usize> {
        self.r
            .ok_or_else(|| Error::InvalidArgument(format!("family {} needs r", self.family)))
    }

    fn need_pattern(&self) -> Result<&PatternGraph> {
        self.pattern
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument(format!("family {} needs a pattern", self.family)))
    }

    pub fn build(&self) -> Result<Construction> {
        let n = self.n;
        let mut flags = Vec::new();
        let (graph, formula) = match self.family {
            Family::K4 => {
                if n < 3 {
                    flags.push("outside verified-saturation range (n < 3)".to_string());
                }
                (k4_construction(n)?, k4_sat_value(n))
            }
            Family::Star => {
                let r = self.need_r()?;
                (star_construction(r, n)?, star_sat_value(r, n))
            }
            Family::Path => {
                let r = self.need_r()?;
                if n < 2 * r {
                    flags.push(format!("closed form only claimed for n >= 2r = {}", 2 * r));
                }
                (path_construction(r, n)?, path_sat_value(r, n))
            }
            Family::TwoConnected => {
                let pattern = self.need_pattern()?;
                let stages = two_connected_upper(pattern, n, self.seed)?;
                (stages.g3, two_connected_bound(pattern, n))
            }
            Family::CliqueExsat => {
                let r = self.need_r()?;
                (clique_exsat_construction(r, n)?, clique_exsat_value(r, n))
            }
            Family::GenericExsat => {
                let pattern = self.need_pattern()?;
                (generic_exsat_construction(pattern, n)?, generic_exsat_bound(pattern, n))
            }
            Family::TreeExsat => {
                let tree = self.need_pattern()?;
                if n < 4 {
                    flags.push("extra-saturation only claimed for n >= 4".to_string());
                }
                (tree_exsat_construction(tree, n)?, tree_exsat_value(tree, n))
            }
        };
        Ok(Construction {
            family: self.family,
            graph,
            formula,
            flags,
        })
    }
}
