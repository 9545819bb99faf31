use std::collections::BTreeSet;

use crate::error::{input, Result};
use crate::graph::Graph;

use super::td::{validate_td, TreeDecomposition};

/// True iff every vertex's later neighbours in `order` form a clique.
/// `order` must list each vertex exactly once.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        later.iter().enumerate().all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Maximum cardinality search; ties go to the smallest vertex id. Returns the
/// visiting order.
pub(crate) fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// A perfect elimination ordering when `g` is chordal, `None` otherwise.
///
/// The reverse of a maximum cardinality search order is perfect exactly when
/// the graph is chordal; the candidate is verified before it is returned.
pub fn peo(g: &Graph) -> Option<Vec<usize>> {
    let mut order = mcs_order(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

/// The graph on `V(g)` joining every two vertices that share a bag.
pub fn chordal_completion(g: &Graph, td: &TreeDecomposition) -> Result<Graph> {
    validate_td(g, td)?;
    let mut set: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    for bag in &td.bags {
        let vs = bag.as_slice();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                set.insert((a, b));
            }
        }
    }
    Ok(Graph::from_edge_set(g.n(), set))
}

/// True iff `g` is a k-tree: `K_{k+1}`, or a k-tree plus one vertex whose
/// neighbourhood is a k-clique.
///
/// Deletes k-simplicial vertices greedily; any such deletion order works.
pub fn is_k_tree(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return input("k-trees need k >= 1");
    }
    let n = g.n();
    if n < k + 1 {
        return Ok(false);
    }
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut left = n;
    while left > k + 1 {
        let pick = (0..n).find(|&v| {
            if !alive[v] || deg[v] != k {
                return false;
            }
            let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
            nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        });
        let Some(v) = pick else { return Ok(false) };
        alive[v] = false;
        left -= 1;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    Ok((0..n).filter(|&v| alive[v]).all(|v| deg[v] == k))
}
