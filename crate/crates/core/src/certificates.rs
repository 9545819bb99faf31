//! Brambles, tangles and hitting sets.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::budget::Budget;
use crate::decomp::{tree, validate_td, TreeDecomposition};
use crate::error::{budget, input, Defect, Result};
use crate::families;
use crate::graph::{components, is_connected_subset, Graph, VertexSet};

/// Outcome of a certificate check: `Err` carries the witness of failure.
pub type Verdict = std::result::Result<(), Defect>;

/// Connected vertex sets that pairwise touch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bramble {
    pub elements: Vec<VertexSet>,
}

/// Connected vertex sets such that every three of them (repetition allowed)
/// share a vertex or are all met by a single edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tangle {
    pub elements: Vec<VertexSet>,
}

impl Tangle {
    pub fn as_bramble(&self) -> Bramble {
        Bramble { elements: self.elements.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HittingSet {
    pub vertices: VertexSet,
    pub order: usize,
}

/// True iff `a` and `b` share a vertex or some edge joins them.
pub fn touches(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    a.intersects(b) || a.iter().any(|u| g.neighbors(u).iter().any(|&w| b.contains(w)))
}

fn check_elements(g: &Graph, elements: &[VertexSet]) -> Result<Verdict> {
    for e in elements {
        g.check_set(e)?;
    }
    for (i, e) in elements.iter().enumerate() {
        if e.is_empty() {
            return Ok(Err(Defect::EmptyElement(i)));
        }
        if !is_connected_subset(g, e)? {
            return Ok(Err(Defect::DisconnectedElement(i)));
        }
    }
    Ok(Ok(()))
}

/// Checks that every element is non-empty and connected and that every two
/// elements touch.
pub fn validate_bramble(g: &Graph, b: &Bramble) -> Result<Verdict> {
    if let Err(d) = check_elements(g, &b.elements)? {
        return Ok(Err(d));
    }
    for (i, x) in b.elements.iter().enumerate() {
        for (j, y) in b.elements.iter().enumerate().skip(i + 1) {
            if !touches(g, x, y) {
                return Ok(Err(Defect::NotTouching(i, j)));
            }
        }
    }
    Ok(Ok(()))
}

/// Checks the triple condition over all unordered triples with repetition.
pub fn validate_tangle(g: &Graph, t: &Tangle) -> Result<Verdict> {
    if let Err(d) = check_elements(g, &t.elements)? {
        return Ok(Err(d));
    }
    let els = &t.elements;
    let met_by_edge = |a: &VertexSet, b: &VertexSet, c: &VertexSet| {
        g.edges().iter().any(|&(u, v)| {
            [a, b, c].iter().all(|s| s.contains(u) || s.contains(v))
        })
    };
    for i in 0..els.len() {
        for j in i..els.len() {
            let ij = els[i].intersection(&els[j]);
            for l in j..els.len() {
                if !ij.intersects(&els[l]) && !met_by_edge(&els[i], &els[j], &els[l]) {
                    return Ok(Err(Defect::TangleTriple(i, j, l)));
                }
            }
        }
    }
    Ok(Ok(()))
}

/// Minimum hitting set of a family of bitmasks, by branch and bound.
///
/// Elements are branched on in order of increasing size; the bound is a
/// greedy packing of pairwise disjoint unhit elements.
pub(crate) fn min_hitting_set(family: &[Mask]) -> Mask {
    let mut elems: Vec<Mask> = family.to_vec();
    elems.sort_by_key(|&e| (bits::count(e), e));
    elems.dedup();
    // a superset is hit whenever its subset is
    let elems: Vec<Mask> = elems
        .iter()
        .enumerate()
        .filter(|&(i, &e)| !elems[..i].iter().any(|&f| f & e == f))
        .map(|(_, &e)| e)
        .collect();
    let mut best = (usize::MAX, 0);
    search(&elems, 0, 0, 0, &mut best);
    best.1
}

fn search(elems: &[Mask], chosen: Mask, excluded: Mask, size: usize, best: &mut (usize, Mask)) {
    let Some(&first) = elems.iter().find(|&&e| e & chosen == 0) else {
        if size < best.0 {
            *best = (size, chosen);
        }
        return;
    };
    let mut used = 0;
    let mut packing = 0;
    for &e in elems {
        if e & chosen == 0 && e & used == 0 {
            used |= e;
            packing += 1;
        }
    }
    if size + packing >= best.0 {
        return;
    }
    let mut excluded = excluded;
    for v in bits::iter(first & !excluded) {
        search(elems, chosen | bits::bit(v), excluded, size + 1, best);
        excluded |= bits::bit(v);
    }
}

/// Minimum hitting set of `sets` over vertices `0..n`.
pub(crate) fn hitting_set_of(n: usize, sets: &[VertexSet]) -> Result<HittingSet> {
    budget("hitting set", n, bits::MAX_MASK_VERTICES)?;
    let masks: Vec<Mask> = sets.iter().map(VertexSet::to_mask).collect();
    let h = VertexSet::from_mask(min_hitting_set(&masks));
    Ok(HittingSet { order: h.len(), vertices: h })
}

/// The order of a bramble (size of a minimum hitting set) with a witness.
pub fn bramble_order(g: &Graph, b: &Bramble) -> Result<HittingSet> {
    validate_bramble(g, b)??;
    hitting_set_of(g.n(), &b.elements)
}

/// The `k × k` grid with a bramble of order `k + 1`: the crosses of the top
/// left `(k-1) × (k-1)` subgrid, the bottom row, and the right column
/// without its bottom vertex.
pub fn grid_bramble(k: usize) -> Result<(Graph, Bramble)> {
    if k < 2 {
        return input("grid_bramble needs k >= 2");
    }
    let g = families::grid(k, k)?;
    let at = |r: usize, c: usize| r * k + c;
    let mut elements = Vec::new();
    for i in 0..k - 1 {
        for j in 0..k - 1 {
            let row = (0..k - 1).map(|c| at(i, c));
            let col = (0..k - 1).map(|r| at(r, j));
            elements.push(row.chain(col).collect());
        }
    }
    elements.push((0..k).map(|c| at(k - 1, c)).collect());
    elements.push((0..k - 1).map(|r| at(r, k - 1)).collect());
    Ok((g, Bramble { elements }))
}

/// A bag of `td` meeting every element of `b`.
///
/// Starts at node 0 and repeatedly steps towards the side of the tree holding
/// the first element the current bag misses. Touching elements can never
/// send the walk back, so it stops at a hitting bag.
pub fn hitting_bag(g: &Graph, b: &Bramble, td: &TreeDecomposition) -> Result<VertexSet> {
    validate_bramble(g, b)??;
    validate_td(g, td)?;
    let adj = td.adjacency()?;
    let mut x = 0;
    let mut came_from = None;
    for _ in 0..=td.node_count() {
        let Some(missed) = b.elements.iter().find(|e| !td.bags[x].intersects(e)) else {
            return Ok(td.bags[x].clone());
        };
        let target = (0..td.node_count())
            .find(|&z| td.bags[z].intersects(missed))
            .expect("every vertex lies in some bag");
        let (parent, _) = tree::rooted(&adj, x);
        let mut step = target;
        while parent[step] != Some(x) {
            step = parent[step].expect("path to the walk position");
        }
        assert_ne!(Some(step), came_from, "Helly walk turned back");
        came_from = Some(x);
        x = step;
    }
    unreachable!("Helly walk did not terminate")
}

/// The component of `g - x` that contains a whole element of `b`, if any.
/// Two such components would hold non-touching elements.
pub fn confining_component(g: &Graph, b: &Bramble, x: &VertexSet) -> Result<Option<VertexSet>> {
    validate_bramble(g, b)??;
    confining_unchecked(g, b, x)
}

fn confining_unchecked(g: &Graph, b: &Bramble, x: &VertexSet) -> Result<Option<VertexSet>> {
    let comps = components(g, x)?;
    let mut found: Option<&VertexSet> = None;
    for e in &b.elements {
        if e.intersects(x) {
            continue;
        }
        let c = comps.iter().find(|c| c.contains(e.first().unwrap())).unwrap();
        match found {
            None => found = Some(c),
            Some(f) if f != c => {
                return Err(Defect::TwoConfiningComponents(f.clone(), c.clone()).into());
            }
            _ => {}
        }
    }
    Ok(found.cloned())
}

/// The tangle `{ confining component of G - X : |X| < k/2 }` built from a
/// bramble of order at least `k`. Its order is at least `⌈k/2⌉`.
pub fn tangle_from_bramble(g: &Graph, b: &Bramble, k: usize, limits: &Budget) -> Result<Tangle> {
    if k <= 1 {
        return input("tangle_from_bramble needs k >= 2; k <= 1 gives an empty family");
    }
    budget("tangle_from_bramble", g.n(), limits.subsets.min(bits::MAX_MASK_VERTICES))?;
    let order = bramble_order(g, b)?.order;
    if order < k {
        return input(format!("bramble order {order} is below k = {k}"));
    }
    let max_x = (k - 1) / 2;
    let mut elements = Vec::new();
    for size in 0..=max_x.min(g.n()) {
        for xm in bits::subsets_of_size(bits::full(g.n()), size) {
            let x = VertexSet::from_mask(xm);
            let c = confining_unchecked(g, b, &x)?
                .expect("a set smaller than the bramble order cannot hit every element");
            elements.push(c);
        }
    }
    elements.sort();
    elements.dedup();
    Ok(Tangle { elements })
}
