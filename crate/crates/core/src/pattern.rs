//! The pattern graph `H` that defines both the host `H[n]` and the copies
//! being counted.
//!
//! Vertices are `0..vertex_count()` in the API; the text format is 1-based.

use std::fmt;

use crate::error::{Error, Result};

/// Largest pattern the bitmask representation supports.
pub const MAX_PATTERN_VERTICES: usize = 64;

/// A simple, loopless, undirected graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PatternGraph {
    vertex_count: usize,
    /// Sorted, each pair `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<u64>,
}

impl PatternGraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidPattern("pattern has no vertices".into()));
        }
        if vertex_count > MAX_PATTERN_VERTICES {
            return Err(Error::InvalidPattern(format!(
                "pattern has {vertex_count} vertices, at most {MAX_PATTERN_VERTICES} supported"
            )));
        }
        let mut adjacency = vec![0u64; vertex_count];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidPattern(format!(
                    "edge {}-{} has an endpoint outside 1..{vertex_count}",
                    a + 1,
                    b + 1
                )));
            }
            if a == b {
                return Err(Error::InvalidPattern(format!("self-loop at vertex {}", a + 1)));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if adjacency[i] >> j & 1 == 1 {
                return Err(Error::InvalidPattern(format!("duplicate edge {}-{}", i + 1, j + 1)));
            }
            adjacency[i] |= 1 << j;
            adjacency[j] |= 1 << i;
            list.push((i, j));
        }
        list.sort_unstable();
        Ok(Self {
            vertex_count,
            edges: list,
            adjacency,
        })
    }

    pub fn complete(r: usize) -> Result<Self> {
        let edges = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j)));
        Self::new(r, edges)
    }

    /// Path on `r` vertices, `0 - 1 - ... - (r-1)`.
    pub fn path(r: usize) -> Result<Self> {
        Self::new(r, (1..r).map(|i| (i - 1, i)))
    }

    pub fn cycle(r: usize) -> Result<Self> {
        if r < 3 {
            return Err(Error::InvalidPattern(format!(
                "cycle needs at least 3 vertices, got {r}"
            )));
        }
        Self::new(r, (0..r).map(|i| (i, (i + 1) % r)))
    }

    /// The star `K_{1,r}` with centre vertex 0 and leaves `1..=r`.
    pub fn star(r: usize) -> Result<Self> {
        Self::new(r + 1, (1..=r).map(|leaf| (0, leaf)))
    }

    /// Resolves the built-in names `k2..k6`, `p3..p8`, `c4..c8` and `star-r`
    /// (`r <= 6`).
    pub fn named(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        if let Some(r) = lower.strip_prefix("star-").and_then(|s| s.parse::<usize>().ok()) {
            return (1..=6).contains(&r).then(|| Self::star(r).ok()).flatten();
        }
        let (kind, rest) = lower.split_at(lower.len().min(1));
        let r: usize = rest.parse().ok()?;
        match kind {
            "k" if (2..=6).contains(&r) => Self::complete(r).ok(),
            "p" if (3..=8).contains(&r) => Self::path(r).ok(),
            "c" if (4..=8).contains(&r) => Self::cycle(r).ok(),
            _ => None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.vertex_count && j < self.vertex_count && self.adjacency[i] >> j & 1 == 1
    }

    /// Neighbour set of `v` as a bitmask over pattern vertices.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adjacency[v])
    }

    fn all_mask(&self) -> u64 {
        if self.vertex_count == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertex_count) - 1
        }
    }

    /// Number of connected components of the subgraph induced on `keep`.
    fn components_within(&self, keep: u64) -> usize {
        let mut unseen = keep;
        let mut components = 0;
        while unseen != 0 {
            components += 1;
            let start = unseen.trailing_zeros() as usize;
            let mut frontier = 1u64 << start;
            unseen &= !frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adjacency[v] & unseen;
                unseen &= !fresh;
                frontier |= fresh;
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(self.all_mask()) == 1
    }

    /// Components of `H - v`.
    pub fn cut_vertex_components(&self, v: usize) -> Result<usize> {
        if v >= self.vertex_count {
            return Err(Error::InvalidArgument(format!(
                "vertex {} is outside 1..{}",
                v + 1,
                self.vertex_count
            )));
        }
        Ok(self.components_within(self.all_mask() & !(1u64 << v)))
    }

    /// Connected with no cut vertex. `K2` counts as 2-connected; a single
    /// vertex does not.
    pub fn is_two_connected(&self) -> bool {
        match self.vertex_count {
            1 => false,
            2 => self.edge_count() == 1,
            _ => {
                self.is_connected()
                    && (0..self.vertex_count).all(|v| self.components_within(self.all_mask() & !(1u64 << v)) == 1)
            }
        }
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.vertex_count && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.vertex_count * (self.vertex_count - 1) / 2
    }

    /// Vertex automorphisms, identity first, at most `limit` of them.
    pub fn automorphisms(&self, limit: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; self.vertex_count];
        self.extend_automorphism(0, 0, &mut image, &mut out, limit);
        out
    }

    fn extend_automorphism(
        &self,
        v: usize,
        used: u64,
        image: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if v == self.vertex_count {
            out.push(image.clone());
            return;
        }
        for w in 0..self.vertex_count {
            if used >> w & 1 == 1 || self.degree(w) != self.degree(v) {
                continue;
            }
            let consistent = (0..v).all(|u| self.has_edge(u, v) == self.has_edge(image[u], w));
            if consistent {
                image[v] = w;
                self.extend_automorphism(v + 1, used | 1 << w, image, out, limit);
            }
        }
        image[v] = usize::MAX;
    }

    /// Parses the `.pat` format: `pattern <v> <e>` followed by `e <i> <j>`
    /// lines. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = crate::io::content_lines(text);
        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `pattern <v> <e>` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "pattern" {
            return Err(Error::parse(header_line, "expected `pattern <v> <e>`"));
        }
        let v = crate::io::parse_count(fields[1], header_line)?;
        let e = crate::io::parse_count(fields[2], header_line)?;
        if v == 0 || v > MAX_PATTERN_VERTICES {
            return Err(Error::parse(
                header_line,
                format!("vertex count must be in 1..={MAX_PATTERN_VERTICES}"),
            ));
        }
        let mut edges = Vec::with_capacity(e);
        let mut seen = std::collections::HashSet::new();
        for (line, content) in lines {
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "e" {
                return Err(Error::parse(line, "expected `e <i> <j>`"));
            }
            let i = crate::io::parse_count(fields[1], line)?;
            let j = crate::io::parse_count(fields[2], line)?;
            if !(1 <= i && i < j && j <= v) {
                return Err(Error::parse(line, format!("edge must satisfy 1 <= i < j <= {v}")));
            }
            if !seen.insert((i, j)) {
                return Err(Error::parse(line, format!("duplicate edge {i} {j}")));
            }
            edges.push((i - 1, j - 1));
        }
        if edges.len() != e {
            return Err(Error::parse(
                header_line,
                format!("header declares {e} edges but {} were given", edges.len()),
            ));
        }
        Self::new(v, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("pattern {} {}\n", self.vertex_count, self.edge_count());
        for &(i, j) in &self.edges {
            out.push_str(&format!("e {} {}\n", i + 1, j + 1));
        }
        out
    }
}

impl fmt::Debug for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternGraph({}; ", self.vertex_count)?;
        f.debug_list()
            .entries(self.edges.iter().map(|(i, j)| (i + 1, j + 1)))
            .finish()?;
        write!(f, ")")
    }
}

pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit)
    }
}
