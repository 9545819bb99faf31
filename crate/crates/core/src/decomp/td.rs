use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::tree::tree_adjacency;
use crate::error::{Defect, Result};
use crate::graph::{Graph, VertexSet};

/// A tree decomposition: node `i` carries `bags[i]`; `edges` joins nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition { bags, edges }
    }

    /// A single bag holding every vertex.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition { bags: vec![g.vertices()], edges: Vec::new() }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Largest bag size minus one. Only meaningful for non-empty decompositions.
    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    pub(crate) fn adjacency(&self) -> Result<Vec<Vec<usize>>> {
        Ok(tree_adjacency(self.bags.len(), &self.edges)?)
    }

    /// True iff every bag has the same size and adjacent bags differ by
    /// exactly one vertex in each direction.
    pub fn is_normalised(&self) -> bool {
        let size = self.max_bag_size();
        self.bags.iter().all(|b| b.len() == size)
            && self.edges.iter().all(|&(x, y)| {
                self.bags[x].difference(&self.bags[y]).len() == 1
                    && self.bags[y].difference(&self.bags[x]).len() == 1
            })
    }
}

/// Checks the tree-decomposition axioms and returns the width.
///
/// The first violated condition is reported: malformed tree, then a vertex
/// absent from every bag or with a disconnected subtree, then an uncovered edge.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> Result<usize> {
    let adj = td.adjacency()?;
    for bag in &td.bags {
        g.check_set(bag)?;
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (x, bag) in td.bags.iter().enumerate() {
        for v in bag.iter() {
            holders[v].push(x);
        }
    }
    let mut mark = vec![usize::MAX; td.node_count()];
    for (v, nodes) in holders.iter().enumerate() {
        let Some(&start) = nodes.first() else {
            return Err(Defect::VertexMissing(v).into());
        };
        for &x in nodes {
            mark[x] = v;
        }
        // flood the nodes holding v
        let mut stack = vec![start];
        mark[start] = usize::MAX;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if mark[y] == v {
                    mark[y] = usize::MAX;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != nodes.len() {
            return Err(Defect::VertexSubtreeDisconnected(v).into());
        }
    }
    for &(u, v) in g.edges() {
        if !holders[u].iter().any(|&x| td.bags[x].contains(v)) {
            return Err(Defect::EdgeUncovered(u, v).into());
        }
    }
    Ok(td.width())
}

/// Mutable working copy of a decomposition used by the rewriting passes.
pub(crate) struct WorkTree {
    pub bags: Vec<VertexSet>,
    pub adj: Vec<BTreeSet<usize>>,
    pub alive: Vec<bool>,
}

impl WorkTree {
    pub fn from_td(td: &TreeDecomposition) -> Self {
        let mut adj = vec![BTreeSet::new(); td.node_count()];
        for &(a, b) in &td.edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        WorkTree { bags: td.bags.clone(), adj, alive: vec![true; td.node_count()] }
    }

    pub fn add_node(&mut self, bag: VertexSet) -> usize {
        self.bags.push(bag);
        self.adj.push(BTreeSet::new());
        self.alive.push(true);
        self.bags.len() - 1
    }

    pub fn link(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a].remove(&b);
        self.adj[b].remove(&a);
    }

    /// Removes `x`, attaching its other neighbours to `into`.
    pub fn contract_into(&mut self, x: usize, into: usize) {
        let nbrs: Vec<usize> = self.adj[x].iter().copied().collect();
        for y in nbrs {
            self.unlink(x, y);
            if y != into {
                self.link(into, y);
            }
        }
        self.alive[x] = false;
    }

    pub fn remove(&mut self, x: usize) {
        let nbrs: Vec<usize> = self.adj[x].iter().copied().collect();
        for y in nbrs {
            self.unlink(x, y);
        }
        self.alive[x] = false;
    }

    pub fn contract_nested(&mut self) {
        loop {
            let pick = self.live_edges().into_iter().find_map(|(a, b)| {
                if self.bags[a].is_subset(&self.bags[b]) {
                    Some((a, b))
                } else if self.bags[b].is_subset(&self.bags[a]) {
                    Some((b, a))
                } else {
                    None
                }
            });
            let Some((x, into)) = pick else { break };
            self.contract_into(x, into);
        }
    }

    pub fn live_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.bags.len() {
            if self.alive[x] {
                for &y in &self.adj[x] {
                    if x < y {
                        out.push((x, y));
                    }
                }
            }
        }
        out
    }

    /// Renumbers live nodes compactly, preserving their relative order.
    pub fn compact(&self) -> (TreeDecomposition, Vec<usize>) {
        let mut index = vec![usize::MAX; self.bags.len()];
        let mut bags = Vec::new();
        for x in 0..self.bags.len() {
            if self.alive[x] {
                index[x] = bags.len();
                bags.push(self.bags[x].clone());
            }
        }
        let edges = self.live_edges().into_iter().map(|(a, b)| (index[a], index[b])).collect();
        (TreeDecomposition { bags, edges }, index)
    }
}

/// Contracts every tree edge whose one bag is contained in the other, until
/// no bag is a subset of a neighbouring bag.
pub(crate) fn contract_nested(td: &TreeDecomposition) -> TreeDecomposition {
    let mut w = WorkTree::from_td(td);
    w.contract_nested();
    w.compact().0
}

/// Rewrites `td` into a normalised decomposition of the same width: every bag
/// has `width + 1` vertices and adjacent bags exchange exactly one vertex.
///
/// Three passes run to a fixpoint: small bags borrow from full neighbours,
/// edges whose bags differ by more than one vertex each way are subdivided,
/// and edges joining equal bags are contracted.
pub fn normalize_td(g: &Graph, td: &TreeDecomposition) -> Result<TreeDecomposition> {
    let width = validate_td(g, td)?;
    let full = width + 1;
    let mut w = WorkTree::from_td(td);

    loop {
        let mut changed = false;

        // grow
        loop {
            let pick = w.live_edges().into_iter().find_map(|(a, b)| {
                let (x, y) = if w.bags[a].len() == full { (a, b) } else { (b, a) };
                (w.bags[x].len() == full && w.bags[y].len() < full).then_some((x, y))
            });
            let Some((x, y)) = pick else { break };
            let v = w.bags[x].difference(&w.bags[y]).first().expect("full bag exceeds smaller one");
            w.bags[y].insert(v);
            changed = true;
        }

        // subdivide
        loop {
            let pick = w
                .live_edges()
                .into_iter()
                .find(|&(x, y)| w.bags[x].difference(&w.bags[y]).len() > 1);
            let Some((x, y)) = pick else { break };
            let v = w.bags[x].difference(&w.bags[y]).first().unwrap();
            let u = w.bags[y].difference(&w.bags[x]).first().unwrap();
            let mut mid = w.bags[x].clone();
            mid.remove(v);
            mid.insert(u);
            let z = w.add_node(mid);
            w.unlink(x, y);
            w.link(x, z);
            w.link(z, y);
            changed = true;
        }

        // contract
        loop {
            let pick = w.live_edges().into_iter().find(|&(x, y)| w.bags[x] == w.bags[y]);
            let Some((x, y)) = pick else { break };
            w.contract_into(y, x);
            changed = true;
        }

        if !changed {
            break;
        }
    }
    Ok(w.compact().0)
}
