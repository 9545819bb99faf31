use std::collections::BTreeSet;

use crate::error::Defect;

/// Checks that `edges` form a tree on `nodes` nodes and returns sorted
/// adjacency lists.
pub(crate) fn tree_adjacency(nodes: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>, Defect> {
    let bad = |why: String| Err(Defect::MalformedTree(why));
    if nodes == 0 {
        return bad("no nodes".into());
    }
    if edges.len() + 1 != nodes {
        return bad(format!("{} nodes but {} edges", nodes, edges.len()));
    }
    let mut seen = BTreeSet::new();
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in edges {
        if a >= nodes || b >= nodes {
            return bad(format!("edge {a}-{b} references a missing node"));
        }
        if a == b {
            return bad(format!("loop at node {a}"));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return bad(format!("repeated edge {a}-{b}"));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut reached = vec![false; nodes];
    reached[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !reached[y] {
                reached[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    if count != nodes {
        return bad("not connected".into());
    }
    Ok(adj)
}

/// Parent pointers and a preorder of a tree rooted at `root`.
pub(crate) fn rooted(adj: &[Vec<usize>], root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
    let mut parent = vec![None; adj.len()];
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        for &y in &adj[x] {
            if y != root && parent[y].is_none() {
                parent[y] = Some(x);
                order.push(y);
            }
        }
    }
    (parent, order)
}
