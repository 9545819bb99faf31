use std::fmt;

use crate::graph::VertexSet;

/// A certificate or decomposition that failed validation, with the witness
/// that shows why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    /// The node/edge structure of a decomposition tree is not a tree.
    MalformedTree(String),
    /// A graph vertex appears in no bag.
    VertexMissing(usize),
    /// The bags containing this vertex do not form a subtree.
    VertexSubtreeDisconnected(usize),
    /// No bag contains both endpoints of this edge.
    EdgeUncovered(usize, usize),
    /// A branch decomposition node has degree other than 1 or 3.
    BadNodeDegree { node: usize, degree: usize },
    /// The edge-to-leaf map of a branch decomposition is not a bijection.
    LeafMap(String),
    /// Element `index` of a family is empty.
    EmptyElement(usize),
    /// Element `index` does not induce a connected subgraph.
    DisconnectedElement(usize),
    /// Two bramble elements neither intersect nor are joined by an edge.
    NotTouching(usize, usize),
    /// Three tangle elements have no common vertex and no edge meeting all three.
    TangleTriple(usize, usize, usize),
    /// Two components of `G - X` each contain a whole bramble element.
    TwoConfiningComponents(VertexSet, VertexSet),
    /// A component holds too many vertices of the separated set.
    HeavyComponent { component: VertexSet, weight: usize },
    /// Branch sets `a` and `b` of a model share `vertex`.
    BranchesOverlap { a: usize, b: usize, vertex: usize },
    /// No host edge joins the branch sets of this pattern edge.
    MissingPatternEdge(usize, usize),
    /// An element of a grid-like minor does not induce a path.
    NotAPath(usize),
    /// Two intersecting paths were placed on the same side.
    NotBipartite(usize, usize),
    /// A vertex carries more than unit weight.
    Overloaded { vertex: usize, load: String },
    /// A weight is negative or not a multiple of `1/r`.
    BadWeight(usize),
    /// Anything else, described in prose.
    Other(String),
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::MalformedTree(why) => write!(f, "malformed tree: {why}"),
            Defect::VertexMissing(v) => write!(f, "vertex {v} appears in no bag"),
            Defect::VertexSubtreeDisconnected(v) => {
                write!(f, "bags containing vertex {v} are not connected")
            }
            Defect::EdgeUncovered(u, v) => write!(f, "edge {u}-{v} is not covered by any bag"),
            Defect::BadNodeDegree { node, degree } => {
                write!(f, "tree node {node} has degree {degree}, expected 1 or 3")
            }
            Defect::LeafMap(why) => write!(f, "leaf map is not a bijection: {why}"),
            Defect::EmptyElement(i) => write!(f, "element {i} is empty"),
            Defect::DisconnectedElement(i) => write!(f, "element {i} is not connected"),
            Defect::NotTouching(i, j) => write!(f, "elements {i} and {j} do not touch"),
            Defect::TangleTriple(i, j, k) => {
                write!(f, "elements {i}, {j}, {k} share no vertex and no edge")
            }
            Defect::TwoConfiningComponents(a, b) => {
                write!(f, "components {a} and {b} both contain a whole element")
            }
            Defect::HeavyComponent { component, weight } => {
                write!(f, "component {component} holds {weight} vertices of the set, too many")
            }
            Defect::BranchesOverlap { a, b, vertex } => {
                write!(f, "branches {a} and {b} share vertex {vertex}")
            }
            Defect::MissingPatternEdge(a, b) => {
                write!(f, "no host edge between branches {a} and {b}")
            }
            Defect::NotAPath(i) => write!(f, "element {i} does not induce a path"),
            Defect::NotBipartite(i, j) => {
                write!(f, "paths {i} and {j} intersect but lie on the same side")
            }
            Defect::Overloaded { vertex, load } => {
                write!(f, "vertex {vertex} carries weight {load} > 1")
            }
            Defect::BadWeight(i) => write!(f, "weight of element {i} is not admissible"),
            Defect::Other(why) => f.write_str(why),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),
    /// A certificate failed validation.
    #[error("validation failed: {0}")]
    Invalid(Defect),
    /// The instance is larger than the configured budget for an exact oracle.
    #[error("budget exceeded in {op}: size {size} > limit {limit}")]
    Budget {
        op: &'static str,
        size: usize,
        limit: usize,
    },
    /// Syntax error in a text format.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl From<Defect> for Error {
    fn from(d: Defect) -> Self {
        Error::Invalid(d)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn budget(op: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::Budget { op, size, limit })
    } else {
        Ok(())
    }
}
