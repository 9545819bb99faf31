//! Minor models: one connected branch set per pattern vertex.

use serde::{Deserialize, Serialize};

use crate::certificates::{Bramble, Verdict};
use crate::error::{input, Defect, Result};
use crate::graph::{is_connected_subset, Graph, VertexSet};

/// A model of `pattern` in `host`: `branches[v]` is the branch set of pattern
/// vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Model {
    pub host: Graph,
    pub pattern: Graph,
    pub branches: Vec<VertexSet>,
}

impl Model {
    /// `g` as a minor of itself, with singleton branches.
    pub fn identity(g: &Graph) -> Self {
        Model { host: g.clone(), pattern: g.clone(), branches: (0..g.n()).map(|v| VertexSet::from([v])).collect() }
    }

    /// For a clique pattern the branch sets pairwise touch.
    pub fn to_bramble(&self) -> Bramble {
        Bramble { elements: self.branches.clone() }
    }
}

/// Checks that branches are non-empty, connected and pairwise disjoint, and
/// that every pattern edge is realised by a host edge.
pub fn validate_model(m: &Model) -> Result<Verdict> {
    if m.branches.len() != m.pattern.n() {
        return input(format!(
            "{} branch sets for a pattern on {} vertices",
            m.branches.len(),
            m.pattern.n()
        ));
    }
    for b in &m.branches {
        m.host.check_set(b)?;
    }
    let mut owner = vec![usize::MAX; m.host.n()];
    for (i, b) in m.branches.iter().enumerate() {
        if b.is_empty() {
            return Ok(Err(Defect::EmptyElement(i)));
        }
        if !is_connected_subset(&m.host, b)? {
            return Ok(Err(Defect::DisconnectedElement(i)));
        }
        for v in b.iter() {
            if owner[v] != usize::MAX {
                return Ok(Err(Defect::BranchesOverlap { a: owner[v], b: i, vertex: v }));
            }
            owner[v] = i;
        }
    }
    for &(p, q) in m.pattern.edges() {
        let joined = m.branches[p]
            .iter()
            .any(|u| m.host.neighbors(u).iter().any(|&w| owner[w] == q));
        if !joined {
            return Ok(Err(Defect::MissingPatternEdge(p, q)));
        }
    }
    Ok(Ok(()))
}

/// A clique model in `host` from branch sets alone.
pub fn clique_model(host: &Graph, branches: Vec<VertexSet>) -> Result<Model> {
    Ok(Model { host: host.clone(), pattern: Graph::complete(branches.len().max(1))?, branches })
}
