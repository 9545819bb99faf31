use crate::bits::{self, Mask};
use crate::budget::Budget;
use crate::error::{budget, input, Result};
use crate::graph::{Graph, VertexSet};

use super::td::{contract_nested, TreeDecomposition};

/// Vertices outside `eliminated ∪ {v}` reachable from `v` through `eliminated`:
/// the later neighbours of `v` in the fill-in graph.
fn q_set(adj: &[Mask], eliminated: Mask, v: usize) -> Mask {
    let region = bits::flood(adj, eliminated | bits::bit(v), v);
    bits::neighbourhood(adj, region) & !region
}

/// Exact treewidth with a decomposition attaining it.
///
/// Dynamic programme over sets of already-eliminated vertices. Ties are
/// broken towards the lexicographically least elimination ordering, so the
/// returned decomposition is deterministic. Bags nested in a neighbouring
/// bag are contracted away.
pub fn exact_treewidth(g: &Graph, limits: &Budget) -> Result<(usize, TreeDecomposition)> {
    budget("exact_treewidth", g.n(), limits.treewidth.min(bits::MAX_MASK_VERTICES))?;
    let order = optimal_ordering(g)?;
    let td = contract_nested(&elimination_td(g, &order)?);
    Ok((td.width(), td))
}

fn optimal_ordering(g: &Graph) -> Result<Vec<usize>> {
    let adj = g.masks("exact_treewidth")?;
    let n = g.n();
    let all = bits::full(n);
    let size = 1usize << n;
    // best[s]: width of the best completion once `s` has been eliminated
    let mut best = vec![0u8; size];
    for s in (0..all).rev() {
        let mut value = u8::MAX;
        for v in bits::iter(all & !s) {
            let q = bits::count(q_set(adj, s, v)) as u8;
            let here = q.max(best[(s | bits::bit(v)) as usize]);
            value = value.min(here);
        }
        best[s as usize] = value;
    }
    let mut order = Vec::with_capacity(n);
    let mut s: Mask = 0;
    while s != all {
        let target = best[s as usize];
        let v = bits::iter(all & !s)
            .find(|&v| {
                let q = bits::count(q_set(adj, s, v)) as u8;
                q.max(best[(s | bits::bit(v)) as usize]) == target
            })
            .expect("optimal choice exists");
        order.push(v);
        s |= bits::bit(v);
    }
    Ok(order)
}

/// Tree decomposition induced by an elimination ordering: vertex `v` gets bag
/// `{v} ∪ Q(v)` hanging below the bag of the first-eliminated member of `Q(v)`.
pub fn elimination_td(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        g.check_vertex(v)?;
        if pos[v] != usize::MAX {
            return input(format!("vertex {v} repeated in elimination ordering"));
        }
        pos[v] = i;
    }
    if order.len() != n {
        return input("elimination ordering must list every vertex once");
    }
    // fill-in graph, eliminated in order
    let mut later: Vec<VertexSet> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect())
        .collect();
    for &v in order {
        let q: Vec<usize> = later[v].iter().collect();
        for (i, &a) in q.iter().enumerate() {
            for &b in &q[i + 1..] {
                let (x, y) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
                later[x].insert(y);
            }
        }
    }
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut last_root: Option<usize> = None;
    for &v in order {
        let mut bag = later[v].clone();
        bag.insert(v);
        bags.push(bag);
    }
    for (i, &v) in order.iter().enumerate() {
        match later[v].iter().min_by_key(|&w| pos[w]) {
            Some(w) => edges.push((i, pos[w])),
            None => {
                if let Some(r) = last_root {
                    edges.push((r, i));
                }
                last_root = Some(i);
            }
        }
    }
    Ok(TreeDecomposition::new(bags, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::validate_td;
    use crate::families;

    fn tw(g: &Graph) -> usize {
        let (w, td) = exact_treewidth(g, &Budget::default()).unwrap();
        assert_eq!(validate_td(g, &td).unwrap(), w);
        w
    }

    #[test]
    fn small_examples() {
        assert_eq!(tw(&Graph::complete(5).unwrap()), 4);
        assert_eq!(tw(&Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()), 2);
        assert_eq!(tw(&families::grid(3, 3).unwrap()), 3);
        assert_eq!(tw(&families::random_tree(9, 4).unwrap()), 1);
        assert_eq!(tw(&Graph::edgeless(3).unwrap()), 0);
        assert_eq!(tw(&Graph::edgeless(1).unwrap()), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let g = families::path(15).unwrap();
        assert!(matches!(
            exact_treewidth(&g, &Budget::default()),
            Err(crate::Error::Budget { .. })
        ));
    }

    #[test]
    fn ordering_is_lexicographically_least() {
        // every ordering of a path is optimal except those eliminating an
        // interior vertex while both its neighbours remain
        let g = families::path(4).unwrap();
        assert_eq!(optimal_ordering(&g).unwrap(), vec![0, 1, 2, 3]);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(optimal_ordering(&c4).unwrap(), vec![0, 1, 2, 3]);
    }
}
