//! The blow-up host `H[n]` and vertex addressing inside it.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pattern::PatternGraph;

/// Vertex `index` of part `part`, both 0-based. Text I/O prints `part.index`
/// 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartiteVertex {
    pub part: usize,
    pub index: usize,
}

impl PartiteVertex {
    pub const fn new(part: usize, index: usize) -> Self {
        Self { part, index }
    }
}

impl fmt::Display for PartiteVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.part + 1, self.index + 1)
    }
}

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: PartiteVertex,
    pub v: PartiteVertex,
}

impl Edge {
    pub fn new(a: PartiteVertex, b: PartiteVertex) -> Self {
        if a <= b {
            Self { u: a, v: b }
        } else {
            Self { u: b, v: a }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

/// `H[n]`: the pattern with each vertex replaced by an independent set of
/// size `n` and each pattern edge by a complete bipartite graph.
#[derive(Clone, PartialEq, Eq)]
pub struct BlowupHost {
    pattern: Arc<PatternGraph>,
    n: usize,
}

impl BlowupHost {
    pub fn new(pattern: impl Into<Arc<PatternGraph>>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("part size n must be at least 1".into()));
        }
        Ok(Self {
            pattern: pattern.into(),
            n,
        })
    }

    pub fn pattern(&self) -> &PatternGraph {
        &self.pattern
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> usize {
        self.pattern.vertex_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts() * self.n
    }

    pub fn slot_count(&self) -> usize {
        self.n * self.n * self.pattern.edge_count()
    }

    pub fn contains(&self, v: PartiteVertex) -> bool {
        v.part < self.parts() && v.index < self.n
    }

    pub fn check_vertex(&self, v: PartiteVertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                part: v.part + 1,
                index: v.index + 1,
            })
        }
    }

    /// Whether `a`–`b` is an edge of `H[n]`.
    pub fn allows(&self, a: PartiteVertex, b: PartiteVertex) -> bool {
        self.contains(a) && self.contains(b) && self.pattern.has_edge(a.part, b.part)
    }

    pub(crate) fn vertex_id(&self, v: PartiteVertex) -> usize {
        v.part * self.n + v.index
    }

    pub fn vertex_at(&self, id: usize) -> PartiteVertex {
        PartiteVertex::new(id / self.n, id % self.n)
    }

    /// Every edge of `H[n]`, in lexicographic order of `(u, v)`.
    pub fn slots(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.slot_count());
        for part in 0..self.parts() {
            let later: Vec<usize> = self.pattern.neighbors(part).filter(|&q| q > part).collect();
            for a in 0..self.n {
                for &q in &later {
                    for b in 0..self.n {
                        out.push(Edge {
                            u: PartiteVertex::new(part, a),
                            v: PartiteVertex::new(q, b),
                        });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for BlowupHost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.pattern, self.n)
    }
}

/// One chosen index per part. `choice[p]` is the index picked in part `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartiteSelection {
    pub choice: Vec<usize>,
}

impl PartiteSelection {
    pub fn vertices(&self) -> impl Iterator<Item = PartiteVertex> + '_ {
        self.choice
            .iter()
            .enumerate()
            .map(|(part, &index)| PartiteVertex::new(part, index))
    }
}

impl fmt::Display for PartiteSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.vertices() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_order_is_lexicographic_and_complete() {
        let host = BlowupHost::new(PatternGraph::path(3).unwrap(), 2).unwrap();
        let slots = host.slots();
        assert_eq!(slots.len(), host.slot_count());
        assert_eq!(slots.len(), 8);
        assert!(slots.windows(2).all(|w| w[0] < w[1]));
        assert!(slots.iter().all(|e| host.allows(e.u, e.v)));
    }

    #[test]
    fn rejects_zero_part_size() {
        assert!(BlowupHost::new(PatternGraph::complete(3).unwrap(), 0).is_err());
    }

    #[test]
    fn addressing_round_trips() {
        let host = BlowupHost::new(PatternGraph::complete(4).unwrap(), 5).unwrap();
        for id in 0..host.vertex_count() {
            assert_eq!(host.vertex_id(host.vertex_at(id)), id);
        }
        assert!(!host.allows(PartiteVertex::new(0, 0), PartiteVertex::new(0, 1)));
        assert!(!host.allows(PartiteVertex::new(0, 0), PartiteVertex::new(1, 5)));
        assert_eq!(PartiteVertex::new(2, 0).to_string(), "3.1");
    }
}
