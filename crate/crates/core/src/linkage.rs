//! k-linked sets, linkedness, well-linked sets and k-connected sets.

use std::fmt;

use crate::bits::{self, Mask};
use crate::budget::Budget;
use crate::certificates::Bramble;
use crate::error::{budget, input, Result};
use crate::graph::{Graph, VertexSet};
use crate::paths::disjoint_paths;

/// Why a linkage property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkageFailure {
    /// Deleting this set leaves no component with more than half of `S`.
    Cut(VertexSet),
    /// Only `found` disjoint paths join these equal-size subsets of `S`.
    Pair { a: VertexSet, b: VertexSet, found: usize },
    /// `S` has fewer than `k` vertices.
    TooSmall { size: usize, k: usize },
}

impl fmt::Display for LinkageFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkageFailure::Cut(x) => write!(f, "removing {x} leaves no component with more than half of S"),
            LinkageFailure::Pair { a, b, found } => {
                write!(f, "only {found} disjoint paths between {a} and {b}")
            }
            LinkageFailure::TooSmall { size, k } => write!(f, "|S| = {size} < k = {k}"),
        }
    }
}

pub type LinkageVerdict = std::result::Result<(), LinkageFailure>;

/// Which linkage property a [`LinkageQuery`] asks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkageMode {
    Linked,
    WellLinked,
    ExtWellLinked,
    KConnected,
    ExtKConnected,
}

/// A linkage question about one vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageQuery {
    pub s: VertexSet,
    pub k: usize,
    pub mode: LinkageMode,
}

impl LinkageQuery {
    pub fn evaluate(&self, g: &Graph, limits: &Budget) -> Result<LinkageVerdict> {
        match self.mode {
            LinkageMode::Linked => is_k_linked(g, &self.s, self.k, limits),
            LinkageMode::WellLinked => is_well_linked(g, &self.s, false, limits),
            LinkageMode::ExtWellLinked => is_well_linked(g, &self.s, true, limits),
            LinkageMode::KConnected => is_k_connected_set(g, &self.s, self.k, false, limits),
            LinkageMode::ExtKConnected => is_k_connected_set(g, &self.s, self.k, true, limits),
        }
    }
}

/// Components of `G - X` for every `X` with `|X| < below`, in order of
/// increasing size then mask.
fn cuts(adj: &[Mask], all: Mask, below: usize) -> Vec<(Mask, Vec<Mask>)> {
    (0..below.min(bits::count(all) + 1))
        .flat_map(|size| bits::subsets_of_size(all, size))
        .map(|x| (x, bits::components(adj, all & !x)))
        .collect()
}

fn has_majority(comps: &[Mask], s: Mask) -> bool {
    let size = bits::count(s);
    comps.iter().any(|&c| 2 * bits::count(c & s) > size)
}

/// True iff for every `X` with `|X| < k` some component of `G - X` holds
/// more than `|s|/2` vertices of `s`; otherwise returns such an `X`.
pub fn is_k_linked(g: &Graph, s: &VertexSet, k: usize, limits: &Budget) -> Result<LinkageVerdict> {
    if k == 0 {
        return input("k-linked needs k >= 1");
    }
    g.check_set(s)?;
    budget("is_k_linked", g.n(), limits.subsets.min(bits::MAX_MASK_VERTICES))?;
    let adj = g.masks("is_k_linked")?;
    let all = bits::full(g.n());
    let sm = s.to_mask();
    for size in 0..k.min(g.n() + 1) {
        for x in bits::subsets_of_size(all, size) {
            if !has_majority(&bits::components(adj, all & !x), sm) {
                return Ok(Err(LinkageFailure::Cut(VertexSet::from_mask(x))));
            }
        }
    }
    Ok(Ok(()))
}

/// All non-empty subsets of `0..n` in lexicographic order of their sorted
/// vertex lists.
fn lex_subsets(n: usize) -> Vec<Mask> {
    let mut out = Vec::with_capacity((1usize << n) - 1);
    fn rec(n: usize, from: usize, cur: Mask, out: &mut Vec<Mask>) {
        for v in from..n {
            let next = cur | bits::bit(v);
            out.push(next);
            rec(n, v + 1, next, out);
        }
    }
    rec(n, 0, 0, &mut out);
    out
}

/// Linkedness: the largest `k` for which some set is k-linked, with the
/// lexicographically least such set.
pub fn linkedness(g: &Graph, limits: &Budget) -> Result<(usize, VertexSet)> {
    budget("linkedness", g.n(), limits.linkedness.min(20))?;
    let adj = g.masks("linkedness")?;
    let all = bits::full(g.n());
    // a set is never more than |S|-linked: X = S has no majority component
    let table = cuts(adj, all, g.n() + 1);
    let mut best = 0;
    let mut witness = 0;
    for s in lex_subsets(g.n()) {
        if bits::count(s) <= best {
            continue;
        }
        // first X (by size) without a majority component
        let level = table
            .iter()
            .find(|(_, comps)| !has_majority(comps, s))
            .map(|(x, _)| bits::count(*x))
            .expect("X = S has no majority component");
        if level > best {
            best = level;
            witness = s;
        }
    }
    Ok((best, VertexSet::from_mask(witness)))
}

/// The components of `G - X` holding more than half of `s`, over all
/// `|X| < k`: pairwise intersecting, so a bramble of order at least `k`
/// when `s` is k-linked.
pub fn bramble_from_linked_set(g: &Graph, s: &VertexSet, k: usize, limits: &Budget) -> Result<Bramble> {
    if let Err(why) = is_k_linked(g, s, k, limits)? {
        return input(format!("set {s} is not {k}-linked: {why}"));
    }
    let adj = g.masks("bramble_from_linked_set")?;
    let all = bits::full(g.n());
    let sm = s.to_mask();
    let size = bits::count(sm);
    let mut elements: Vec<VertexSet> = cuts(adj, all, k)
        .into_iter()
        .filter_map(|(_, comps)| comps.into_iter().find(|&c| 2 * bits::count(c & sm) > size))
        .map(VertexSet::from_mask)
        .collect();
    elements.sort();
    elements.dedup();
    Ok(Bramble { elements })
}

/// Checks one pair `(a, b)`; paths may not pass through `forbidden`.
fn pair_ok(g: &Graph, a: Mask, b: Mask, forbidden: &VertexSet) -> Result<LinkageVerdict> {
    let (a, b) = (VertexSet::from_mask(a), VertexSet::from_mask(b));
    let found = disjoint_paths(g, &a, &b, forbidden)?.count();
    if found < a.len() {
        Ok(Err(LinkageFailure::Pair { a, b, found }))
    } else {
        Ok(Ok(()))
    }
}

/// Pairs `(A, B)` of subsets of `s` with `|A| = |B|` between 1 and `max`,
/// each unordered pair once. With `disjoint_only`, only disjoint pairs.
fn equal_pairs(s: Mask, max: usize, disjoint_only: bool) -> Vec<(Mask, Mask)> {
    let mut out = Vec::new();
    for size in 1..=max.min(bits::count(s)) {
        let subsets = bits::subsets_of_size(s, size);
        for (i, &a) in subsets.iter().enumerate() {
            for &b in &subsets[i + 1..] {
                if !disjoint_only || a & b == 0 {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

fn check_pairs(g: &Graph, s: &VertexSet, max: usize, external: bool) -> Result<LinkageVerdict> {
    let forbidden = if external { s.clone() } else { VertexSet::new() };
    // A = B always links by singleton paths; internally, overlapping pairs
    // need their own check, externally they reduce to the disjoint pair
    // (A - B, B - A)
    for (a, b) in equal_pairs(s.to_mask(), max, external) {
        if let Err(f) = pair_ok(g, a, b, &forbidden)? {
            return Ok(Err(f));
        }
    }
    Ok(Ok(()))
}

/// True iff every two equal-size subsets of `s` are joined by that many
/// vertex-disjoint paths; `external` additionally keeps the paths' internal
/// vertices out of `s`.
pub fn is_well_linked(g: &Graph, s: &VertexSet, external: bool, limits: &Budget) -> Result<LinkageVerdict> {
    g.check_set(s)?;
    budget("is_well_linked", s.len(), limits.well_linked.min(bits::MAX_MASK_VERTICES))?;
    budget("is_well_linked", g.n(), bits::MAX_MASK_VERTICES)?;
    check_pairs(g, s, s.len(), external)
}

/// The largest well-linked set, lexicographically least among those of
/// maximum size. Well-linkedness is inherited by subsets, so sizes are tried
/// from the top down.
pub fn well_linked_number(g: &Graph, limits: &Budget) -> Result<(usize, VertexSet)> {
    budget("well_linked_number", g.n(), limits.well_linked.min(20))?;
    let all = bits::full(g.n());
    for size in (1..=g.n()).rev() {
        let mut layer: Vec<VertexSet> =
            bits::subsets_of_size(all, size).into_iter().map(VertexSet::from_mask).collect();
        layer.sort();
        for s in layer {
            if check_pairs(g, &s, size, true)?.is_ok() {
                return Ok((size, s));
            }
        }
    }
    unreachable!("a single vertex is well-linked")
}

/// True iff `|s| >= k` and every two subsets of `s` of equal size at most
/// `k` are joined by that many disjoint paths. In `external` mode the paths
/// avoid `s` internally, which also rules out every edge of `G[s]` except a
/// direct edge from `A` to `B`.
pub fn is_k_connected_set(
    g: &Graph,
    s: &VertexSet,
    k: usize,
    external: bool,
    limits: &Budget,
) -> Result<LinkageVerdict> {
    g.check_set(s)?;
    budget("is_k_connected_set", s.len(), limits.well_linked.min(bits::MAX_MASK_VERTICES))?;
    budget("is_k_connected_set", g.n(), bits::MAX_MASK_VERTICES)?;
    if s.len() < k {
        return Ok(Err(LinkageFailure::TooSmall { size: s.len(), k }));
    }
    let forbidden = if external { s.clone() } else { VertexSet::new() };
    for (a, b) in equal_pairs(s.to_mask(), k, false) {
        if let Err(f) = pair_ok(g, a, b, &forbidden)? {
            return Ok(Err(f));
        }
    }
    Ok(Ok(()))
}
