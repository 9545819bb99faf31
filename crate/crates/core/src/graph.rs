//! Simple undirected graphs on dense vertex ids `0..n`, plus the shared
//! primitives the rest of the crate builds on.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{budget, input, Result};

/// An ordered, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.iter().any(|v| other.contains(v))
    }

    pub(crate) fn to_mask(&self) -> Mask {
        self.iter().fold(0, |m, v| m | bits::bit(v))
    }

    pub(crate) fn from_mask(m: Mask) -> Self {
        VertexSet(bits::iter(m).collect())
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// An immutable simple undirected graph. Serialises as `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    masks: Vec<Mask>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = crate::error::Error;

    fn try_from(r: GraphRepr) -> Result<Graph> {
        Graph::new(r.n, r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { n: g.n, edges: g.edges }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints. Graphs must have at least one vertex.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return input("a graph needs at least one vertex");
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge {u}-{v} out of range for {n} vertices"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return input(format!("duplicate edge {u}-{v}"));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    /// Builds a graph from already-normalised pairs `u < v < n`.
    pub(crate) fn from_edge_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = if n <= bits::MAX_MASK_VERTICES {
            adj.iter().map(|l| l.iter().fold(0, |m, &w| m | bits::bit(w))).collect()
        } else {
            Vec::new()
        };
        Graph { n, edges, adj, masks }
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            input(format!("vertex {v} out of range for {} vertices", self.n))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Neighbourhood bitmasks; errors when the graph is too large for them.
    pub(crate) fn masks(&self, op: &'static str) -> Result<&[Mask]> {
        budget(op, self.n, bits::MAX_MASK_VERTICES)?;
        Ok(&self.masks)
    }

    /// The subgraph induced by `keep`, relabelled to `0..keep.len()` in order.
    pub fn induced(&self, keep: &VertexSet) -> Result<Graph> {
        self.check_set(keep)?;
        if keep.is_empty() {
            return input("induced subgraph on the empty set");
        }
        let pos = |v: usize| keep.as_slice().binary_search(&v).ok();
        let set = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((pos(u)?, pos(v)?)))
            .collect();
        Ok(Graph::from_edge_set(keep.len(), set))
    }
}

/// Connected components of `g - removed`, ordered by their minimum vertex.
pub fn components(g: &Graph, removed: &VertexSet) -> Result<Vec<VertexSet>> {
    g.check_set(removed)?;
    let mut seen = vec![false; g.n()];
    for v in removed.iter() {
        seen[v] = true;
    }
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        out.push(comp.into_iter().collect());
    }
    Ok(out)
}

/// True iff `s` is non-empty and induces a connected subgraph.
pub fn is_connected_subset(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    let Some(start) = s.first() else {
        return Ok(false);
    };
    let mut seen = VertexSet::new();
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if s.contains(w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    Ok(seen.len() == s.len())
}

/// `G □ K_2`: vertex `(v, i)` is `v + i * n` for `i` in `{0, 1}`.
pub fn cartesian_with_k2(g: &Graph) -> Graph {
    let n = g.n();
    let mut set = BTreeSet::new();
    for &(u, v) in g.edges() {
        set.insert((u, v));
        set.insert((u + n, v + n));
    }
    for v in 0..n {
        set.insert((v, v + n));
    }
    Graph::from_edge_set(2 * n, set)
}
