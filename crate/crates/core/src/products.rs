//! Lexicographic and cartesian products of a tree with a clique, their
//! decompositions, and models of a graph inside them.
//!
//! Product vertex `(x, i)` is encoded as `x * k + i`.

use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::decomp::{chordal_completion, exact_treewidth, peo, tree, validate_td, TreeDecomposition};
use crate::error::{input, Result};
use crate::graph::{components, Graph, VertexSet};
use crate::model::Model;

/// A graph known to be a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeGraph(Graph);

impl TreeGraph {
    pub fn new(g: Graph) -> Result<Self> {
        if g.m() + 1 != g.n() || components(&g, &VertexSet::new())?.len() != 1 {
            return input("not a tree");
        }
        Ok(TreeGraph(g))
    }

    /// The tree underlying a tree decomposition.
    pub fn of_td(td: &TreeDecomposition) -> Result<Self> {
        td.adjacency()?;
        Self::new(Graph::new(td.node_count(), td.edges.iter().copied())?)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return input("k must be at least 1");
    }
    Ok(())
}

fn clique_edges(x: usize, k: usize, set: &mut BTreeSet<(usize, usize)>) {
    for i in 0..k {
        for j in i + 1..k {
            set.insert((x * k + i, x * k + j));
        }
    }
}

/// `T[K_k]`: each tree node becomes a `k`-clique and each tree edge a
/// complete bipartite `K_{k,k}`.
pub fn lex_product(t: &TreeGraph, k: usize) -> Result<Graph> {
    check_k(k)?;
    let mut set = BTreeSet::new();
    for x in 0..t.0.n() {
        clique_edges(x, k, &mut set);
    }
    for &(x, y) in t.0.edges() {
        for i in 0..k {
            for j in 0..k {
                set.insert((x * k + i, y * k + j));
            }
        }
    }
    Ok(Graph::from_edge_set(t.0.n() * k, set))
}

/// `T^(k)`, the cartesian product of `T` with `K_k`.
pub fn cart_product_tree(t: &TreeGraph, k: usize) -> Result<Graph> {
    check_k(k)?;
    let mut set = BTreeSet::new();
    for x in 0..t.0.n() {
        clique_edges(x, k, &mut set);
    }
    for &(x, y) in t.0.edges() {
        for i in 0..k {
            set.insert((x * k + i, y * k + i));
        }
    }
    Ok(Graph::from_edge_set(t.0.n() * k, set))
}

/// A model of `g` in `T[K_k]` where `T` is the tree of `td` and
/// `k = width + 1`. Each vertex takes one slot, fixed at the bag nearest the
/// root that contains it, and its branch set is that slot in every bag
/// containing it.
pub fn model_in_lex_product(g: &Graph, td: &TreeDecomposition) -> Result<(TreeGraph, usize, Model)> {
    let k = validate_td(g, td)? + 1;
    let t = TreeGraph::of_td(td)?;
    let adj = td.adjacency()?;
    let (parent, order) = tree::rooted(&adj, 0);
    let mut slot = vec![usize::MAX; g.n()];
    for &x in &order {
        let taken: BTreeSet<usize> = td.bags[x].iter().filter(|&v| slot[v] != usize::MAX).map(|v| slot[v]).collect();
        debug_assert!(parent[x].is_none_or(|p| td.bags[x]
            .iter()
            .all(|v| slot[v] == usize::MAX || td.bags[p].contains(v))));
        let mut free = (0..k).filter(|i| !taken.contains(i));
        for v in td.bags[x].iter() {
            if slot[v] == usize::MAX {
                slot[v] = free.next().expect("bag fits in k slots");
            }
        }
    }
    let branches = branches_by_colour(g, td, k, &slot);
    let host = lex_product(&t, k)?;
    Ok((t, k, Model { host, pattern: g.clone(), branches }))
}

fn branches_by_colour(g: &Graph, td: &TreeDecomposition, k: usize, colour: &[usize]) -> Vec<VertexSet> {
    let mut branches = vec![VertexSet::new(); g.n()];
    for (x, bag) in td.bags.iter().enumerate() {
        for v in bag.iter() {
            branches[v].insert(x * k + colour[v]);
        }
    }
    branches
}

/// Tree decomposition of `T[K_k]` of width `2k - 1`: bag `K_x` at each tree
/// node and `K_x ∪ K_y` at a new node subdividing each tree edge `xy`.
pub fn td_of_lex_product(t: &TreeGraph, k: usize) -> Result<TreeDecomposition> {
    check_k(k)?;
    let clique = |x: usize| -> VertexSet { (x * k..(x + 1) * k).collect() };
    let mut bags: Vec<VertexSet> = (0..t.0.n()).map(clique).collect();
    let mut edges = Vec::new();
    for &(x, y) in t.0.edges() {
        let mid = bags.len();
        bags.push(clique(x).union(&clique(y)));
        edges.push((x, mid));
        edges.push((mid, y));
    }
    Ok(TreeDecomposition::new(bags, edges))
}

/// A model of `g` in `T^(k)` with `k = tw(g) + 1`.
///
/// Takes a minimum-width decomposition, completes it to a chordal graph,
/// colours that greedily in reverse perfect elimination order with at most
/// `k` colours, and gives `v` the branch set `{(x, colour(v)) : v ∈ B_x}`.
pub fn model_in_cart_product(g: &Graph, limits: &Budget) -> Result<(TreeGraph, usize, Model)> {
    let (width, td) = exact_treewidth(g, limits)?;
    let k = width + 1;
    let chordal = chordal_completion(g, &td)?;
    let order = peo(&chordal).expect("a chordal completion is chordal");
    let mut colour = vec![usize::MAX; g.n()];
    for &v in order.iter().rev() {
        let used: BTreeSet<usize> = chordal.neighbors(v).iter().map(|&w| colour[w]).collect();
        colour[v] = (0..).find(|c| !used.contains(c)).unwrap();
        assert!(colour[v] < k, "greedy colouring needs more than k colours");
    }
    let t = TreeGraph::of_td(&td)?;
    let branches = branches_by_colour(g, &td, k, &colour);
    let host = cart_product_tree(&t, k)?;
    Ok((t, k, Model { host, pattern: g.clone(), branches }))
}

/// Tree decomposition of `T^(k)` of width `k`: bag `{(x, i)}` at each tree
/// node, and each tree edge `xy` subdivided `k` times with bags
/// `{(x, i) : i >= j} ∪ {(y, i) : i <= j}` for `j = 0..k`.
pub fn td_of_cart_product(t: &TreeGraph, k: usize) -> Result<TreeDecomposition> {
    check_k(k)?;
    let mut bags: Vec<VertexSet> = (0..t.0.n()).map(|x| (x * k..(x + 1) * k).collect()).collect();
    let mut edges = Vec::new();
    for &(x, y) in t.0.edges() {
        let mut prev = x;
        for j in 0..k {
            let bag = (j..k).map(|i| x * k + i).chain((0..=j).map(|i| y * k + i)).collect();
            let id = bags.len();
            bags.push(bag);
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, y));
    }
    Ok(TreeDecomposition::new(bags, edges))
}
