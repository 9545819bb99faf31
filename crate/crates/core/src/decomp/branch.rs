use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::td::{validate_td, TreeDecomposition, WorkTree};
use super::tree::{rooted, tree_adjacency};
use crate::budget::Budget;
use crate::error::{budget, input, Defect, Result};
use crate::graph::{Graph, VertexSet};

/// One leaf of a branch decomposition and the graph edge mapped to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Leaf {
    pub edge: (usize, usize),
    pub node: usize,
}

/// A tree with all degrees 1 or 3 whose leaves are in bijection with the
/// graph's edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDecomposition {
    pub nodes: usize,
    pub tree_edges: Vec<(usize, usize)>,
    pub leaves: Vec<Leaf>,
}

impl BranchDecomposition {
    fn leaf_edges(&self) -> BTreeMap<usize, (usize, usize)> {
        self.leaves.iter().map(|l| (l.node, l.edge)).collect()
    }

    /// Vertices across each tree edge, in `tree_edges` order. Assumes the
    /// decomposition is valid for `g`.
    pub(crate) fn across_sets(&self, g: &Graph) -> Vec<VertexSet> {
        let adj = tree_adjacency(self.nodes, &self.tree_edges).expect("validated tree");
        let (parent, order) = rooted(&adj, 0);
        let leaf_edges = self.leaf_edges();
        // count[x][v]: graph edges at v mapped into the subtree below x
        let mut count = vec![vec![0usize; g.n()]; self.nodes];
        for &x in order.iter().rev() {
            if let Some(&(u, v)) = leaf_edges.get(&x) {
                count[x][u] += 1;
                count[x][v] += 1;
            }
            if let Some(p) = parent[x] {
                let below = std::mem::take(&mut count[x]);
                for (d, s) in count[p].iter_mut().zip(&below) {
                    *d += *s;
                }
                count[x] = below;
            }
        }
        self.tree_edges
            .iter()
            .map(|&(a, b)| {
                let child = if parent[a] == Some(b) { a } else { b };
                (0..g.n())
                    .filter(|&v| count[child][v] > 0 && count[child][v] < g.degree(v))
                    .collect()
            })
            .collect()
    }

    /// Largest number of vertices across a tree edge.
    pub fn width(&self, g: &Graph) -> usize {
        self.across_sets(g).iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

/// Checks the branch-decomposition axioms and returns the width: the largest
/// number of vertices with incident edges on both sides of some tree edge.
pub fn validate_bd(g: &Graph, bd: &BranchDecomposition) -> Result<usize> {
    if g.m() < 2 {
        return input("branch decompositions need at least two edges");
    }
    let adj = tree_adjacency(bd.nodes, &bd.tree_edges)?;
    for (node, nbrs) in adj.iter().enumerate() {
        if nbrs.len() != 1 && nbrs.len() != 3 {
            return Err(Defect::BadNodeDegree { node, degree: nbrs.len() }.into());
        }
    }
    let mut leaf_of = vec![usize::MAX; g.m()];
    let mut edge_at = vec![usize::MAX; bd.nodes];
    for leaf in &bd.leaves {
        let (u, v) = leaf.edge;
        let Some(e) = g.edge_index(u, v).filter(|_| u != v) else {
            return Err(Defect::LeafMap(format!("{u}-{v} is not an edge of the graph")).into());
        };
        if leaf.node >= bd.nodes || adj[leaf.node].len() != 1 {
            return Err(Defect::LeafMap(format!("node {} is not a leaf", leaf.node)).into());
        }
        if leaf_of[e] != usize::MAX {
            return Err(Defect::LeafMap(format!("edge {u}-{v} mapped twice")).into());
        }
        if edge_at[leaf.node] != usize::MAX {
            return Err(Defect::LeafMap(format!("leaf {} carries two edges", leaf.node)).into());
        }
        leaf_of[e] = leaf.node;
        edge_at[leaf.node] = e;
    }
    if let Some(e) = leaf_of.iter().position(|&x| x == usize::MAX) {
        let (u, v) = g.edges()[e];
        return Err(Defect::LeafMap(format!("edge {u}-{v} has no leaf")).into());
    }
    if let Some(x) = (0..bd.nodes).find(|&x| adj[x].len() == 1 && edge_at[x] == usize::MAX) {
        return Err(Defect::LeafMap(format!("leaf {x} carries no edge")).into());
    }
    Ok(bd.width(g))
}

/// Branch decomposition of width at most `width(td) + 1`.
///
/// Makes the decomposition minimal by contracting nested bags, hangs a new
/// leaf bag `{u, v}` off the first bag holding each edge `uv`, prunes other
/// leaves, suppresses degree-2 nodes, and splits high-degree nodes `x` by
/// inserting `s` with `B_s = B_x ∩ (B_y ∪ B_z)` between `x` and two of its
/// neighbours `y`, `z`.
pub fn td_to_bd(g: &Graph, td: &TreeDecomposition) -> Result<BranchDecomposition> {
    if g.m() < 2 {
        return input("branch decompositions need at least two edges");
    }
    validate_td(g, td)?;
    let mut w = WorkTree::from_td(td);

    w.contract_nested();

    let original = w.bags.len();
    let mut designated = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let host = (0..original)
            .find(|&x| w.alive[x] && w.bags[x].contains(u) && w.bags[x].contains(v))
            .expect("validated decomposition covers every edge");
        let leaf = w.add_node(VertexSet::from([u, v]));
        w.link(host, leaf);
        designated.push(leaf);
    }
    let is_designated = |x: usize| x >= original;

    // prune undesignated leaves
    loop {
        let pick = (0..original).find(|&x| w.alive[x] && w.adj[x].len() <= 1);
        let Some(x) = pick else { break };
        w.remove(x);
    }
    // suppress degree-2 nodes
    loop {
        let pick = (0..original).find(|&x| w.alive[x] && w.adj[x].len() == 2);
        let Some(x) = pick else { break };
        let nb: Vec<usize> = w.adj[x].iter().copied().collect();
        w.remove(x);
        w.link(nb[0], nb[1]);
    }
    // split high-degree nodes
    loop {
        let pick = (0..w.bags.len()).find(|&x| w.alive[x] && !is_designated(x) && w.adj[x].len() > 3);
        let Some(x) = pick else { break };
        let nb: Vec<usize> = w.adj[x].iter().copied().take(2).collect();
        let (y, z) = (nb[0], nb[1]);
        let bag = w.bags[x].intersection(&w.bags[y].union(&w.bags[z]));
        let s = w.add_node(bag);
        w.unlink(x, y);
        w.unlink(x, z);
        w.link(s, y);
        w.link(s, z);
        w.link(s, x);
    }

    let (tree, index) = w.compact();
    let leaves = g
        .edges()
        .iter()
        .zip(&designated)
        .map(|(&edge, &leaf)| Leaf { edge, node: index[leaf] })
        .collect();
    let bd = BranchDecomposition { nodes: tree.node_count(), tree_edges: tree.edges, leaves };
    debug_assert!(validate_bd(g, &bd).is_ok());
    Ok(bd)
}

/// Tree decomposition from a branch decomposition of width `k`, of width at
/// most `max(2, 3k/2) - 1`.
///
/// Leaf bags hold the endpoints of their edge; internal bags hold every
/// vertex across an incident tree edge. Isolated vertices get singleton bags
/// attached to node 0.
pub fn bd_to_td(g: &Graph, bd: &BranchDecomposition) -> Result<TreeDecomposition> {
    validate_bd(g, bd)?;
    let across = bd.across_sets(g);
    let mut bags = vec![VertexSet::new(); bd.nodes];
    for (&(a, b), set) in bd.tree_edges.iter().zip(&across) {
        bags[a] = bags[a].union(set);
        bags[b] = bags[b].union(set);
    }
    for leaf in &bd.leaves {
        bags[leaf.node] = VertexSet::from([leaf.edge.0, leaf.edge.1]);
    }
    let mut edges = bd.tree_edges.clone();
    for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
        edges.push((0, bags.len()));
        bags.push(VertexSet::from([v]));
    }
    let td = TreeDecomposition::new(bags, edges);
    debug_assert!(validate_td(g, &td).is_ok());
    Ok(td)
}

/// Exact branchwidth, with a decomposition attaining it when `|E| >= 2`.
/// Graphs with at most one edge have branchwidth 0 and no decomposition.
///
/// Dynamic programme over edge subsets:
/// `f(S) = max(boundary(S), min over splits of max(f(T), f(S - T)))`.
pub fn exact_branchwidth(g: &Graph, limits: &Budget) -> Result<(usize, Option<BranchDecomposition>)> {
    let m = g.m();
    budget("exact_branchwidth", m, limits.branchwidth.min(30))?;
    if m <= 1 {
        return Ok((0, None));
    }
    let mut incident = vec![0u32; g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        incident[u] |= 1 << e;
        incident[v] |= 1 << e;
    }
    let all: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };
    let boundary = |s: u32| incident.iter().filter(|&&i| i & s != 0 && i & !s & all != 0).count() as u8;
    let size = 1usize << m;
    let mut f = vec![0u8; size];
    let mut split = vec![0u32; size];
    for s in 1..=all {
        if s.count_ones() == 1 {
            f[s as usize] = boundary(s);
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut best = u8::MAX;
        let mut arg = 0;
        // T ranges over subsets of s containing its lowest edge, T != s
        let mut sub = rest;
        loop {
            let t = sub | low;
            if t != s {
                let v = f[t as usize].max(f[(s & !t) as usize]);
                if v < best || (v == best && t < arg) {
                    best = v;
                    arg = t;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        f[s as usize] = best.max(boundary(s));
        split[s as usize] = arg;
    }

    // rebuild the rooted binary tree, then splice out the degree-2 root
    let mut tree_edges = Vec::new();
    let mut leaves = Vec::new();
    let mut nodes = 0usize;
    let mut stack = vec![(all, None::<usize>)];
    while let Some((s, parent)) = stack.pop() {
        let id = nodes;
        nodes += 1;
        if let Some(p) = parent {
            tree_edges.push((p, id));
        }
        if s.count_ones() == 1 {
            leaves.push(Leaf { edge: g.edges()[s.trailing_zeros() as usize], node: id });
        } else {
            let t = split[s as usize];
            stack.push((s & !t, Some(id)));
            stack.push((t, Some(id)));
        }
    }
    // the root is node 0 with exactly two children
    let kids: Vec<usize> = tree_edges.iter().filter(|e| e.0 == 0).map(|e| e.1).collect();
    tree_edges.retain(|e| e.0 != 0);
    tree_edges.push((kids[0], kids[1]));
    let tree_edges = tree_edges.into_iter().map(|(a, b)| (a - 1, b - 1)).collect();
    for leaf in &mut leaves {
        leaf.node -= 1;
    }
    leaves.sort();
    let bd = BranchDecomposition { nodes: nodes - 1, tree_edges, leaves };
    let width = f[all as usize] as usize;
    debug_assert_eq!(validate_bd(g, &bd).ok(), Some(width));
    Ok((width, Some(bd)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::exact_treewidth;
    use crate::families;

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn bw(g: &Graph) -> usize {
        let (w, bd) = exact_branchwidth(g, &Budget::default()).unwrap();
        if let Some(bd) = bd {
            assert_eq!(validate_bd(g, &bd).unwrap(), w);
        }
        w
    }

    #[test]
    fn star_and_triangle_widths() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let bd = BranchDecomposition {
            nodes: 4,
            tree_edges: vec![(0, 1), (0, 2), (0, 3)],
            leaves: vec![
                Leaf { edge: (0, 1), node: 1 },
                Leaf { edge: (0, 2), node: 2 },
                Leaf { edge: (0, 3), node: 3 },
            ],
        };
        assert_eq!(validate_bd(&star, &bd).unwrap(), 1);
        let k3 = Graph::complete(3).unwrap();
        let bd3 = BranchDecomposition {
            leaves: vec![
                Leaf { edge: (0, 1), node: 1 },
                Leaf { edge: (0, 2), node: 2 },
                Leaf { edge: (1, 2), node: 3 },
            ],
            ..bd
        };
        assert_eq!(validate_bd(&k3, &bd3).unwrap(), 2);
    }

    fn c4_split(first: (usize, usize), second: (usize, usize)) -> BranchDecomposition {
        let rest: Vec<(usize, usize)> =
            c4().edges().iter().copied().filter(|&e| e != first && e != second).collect();
        BranchDecomposition {
            nodes: 6,
            tree_edges: vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)],
            leaves: vec![
                Leaf { edge: first, node: 2 },
                Leaf { edge: second, node: 3 },
                Leaf { edge: rest[0], node: 4 },
                Leaf { edge: rest[1], node: 5 },
            ],
        }
    }

    #[test]
    fn c4_pairings() {
        // adjacent edges together: only the two shared corners are across
        let bd = c4_split((0, 1), (1, 2));
        assert_eq!(validate_bd(&c4(), &bd).unwrap(), 2);
        let td = bd_to_td(&c4(), &bd).unwrap();
        assert!(validate_td(&c4(), &td).unwrap() <= 2);
        // opposite edges together: every vertex is across the middle edge
        assert_eq!(validate_bd(&c4(), &c4_split((0, 1), (2, 3))).unwrap(), 4);
    }

    #[test]
    fn bad_decompositions() {
        let k3 = Graph::complete(3).unwrap();
        let two_leaves = BranchDecomposition {
            nodes: 3,
            tree_edges: vec![(0, 1), (1, 2)],
            leaves: vec![Leaf { edge: (0, 1), node: 0 }, Leaf { edge: (0, 2), node: 2 }],
        };
        assert!(matches!(
            validate_bd(&k3, &two_leaves),
            Err(crate::Error::Invalid(Defect::BadNodeDegree { node: 1, degree: 2 }))
        ));
        let edge = Graph::new(2, [(0, 1)]).unwrap();
        assert!(matches!(validate_bd(&edge, &two_leaves), Err(crate::Error::Input(_))));
    }

    #[test]
    fn exact_examples() {
        assert_eq!(bw(&Graph::new(2, [(0, 1)]).unwrap()), 0);
        assert_eq!(bw(&Graph::new(6, (1..6).map(|v| (0, v))).unwrap()), 1);
        assert_eq!(bw(&c4()), 2);
        assert_eq!(bw(&Graph::complete(3).unwrap()), 2);
        assert_eq!(bw(&Graph::complete(4).unwrap()), 3);
        assert_eq!(bw(&families::grid(3, 3).unwrap()), 3);
    }

    #[test]
    fn conversions_respect_bounds() {
        for g in [
            families::path(4).unwrap(),
            Graph::complete(5).unwrap(),
            c4(),
            families::kn_minus_matching(4).unwrap(),
            families::grid(3, 3).unwrap(),
        ] {
            let (tw, td) = exact_treewidth(&g, &Budget::default()).unwrap();
            let bd = td_to_bd(&g, &td).unwrap();
            assert!(validate_bd(&g, &bd).unwrap() <= tw + 1);
            let trivial = td_to_bd(&g, &TreeDecomposition::trivial(&g)).unwrap();
            assert!(validate_bd(&g, &trivial).unwrap() <= g.n());
            let (k, best) = exact_branchwidth(&g, &Budget::default()).unwrap();
            let back = bd_to_td(&g, &best.unwrap()).unwrap();
            let w = validate_td(&g, &back).unwrap();
            assert!(2 * (w + 1) <= 3 * k.max(2), "{g:?}: td width {w}, bw {k}");
        }
    }

    #[test]
    fn isolated_vertices_get_bags() {
        let g = Graph::new(5, [(0, 1), (1, 2)]).unwrap();
        let (_, bd) = exact_branchwidth(&g, &Budget::default()).unwrap();
        let td = bd_to_td(&g, &bd.unwrap()).unwrap();
        assert_eq!(validate_td(&g, &td).unwrap(), 1);
    }
}
