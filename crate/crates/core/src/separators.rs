//! Balanced separators: `(k, S, c)`-separators in the standard and starred
//! sense, exact separation numbers, separators read off tree decompositions,
//! and grouping of components into few light parts.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::budget::Budget;
use crate::certificates::Verdict;
use crate::decomp::{normalize_td, tree, validate_td, TreeDecomposition};
use crate::error::{budget, input, Defect, Result};
use crate::graph::{components, Graph, VertexSet};
use crate::rational::{self, check_balance, Rational};

/// A claimed separator `x` for `s` at balance `c`.
///
/// Standard: every component of `G - x` holds at most `c·|s - x|` vertices
/// of `s`. Starred (`variant = true`): at most `c·|s|` vertices of `s - x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorCert {
    pub x: VertexSet,
    pub s: VertexSet,
    #[serde(with = "rational::as_string")]
    pub c: Rational,
    pub variant: bool,
}

/// Checks a separator certificate with exact arithmetic; a failure names the
/// heavy component.
pub fn is_separator(g: &Graph, cert: &SeparatorCert) -> Result<Verdict> {
    check_balance(&cert.c)?;
    g.check_set(&cert.x)?;
    g.check_set(&cert.s)?;
    let total = if cert.variant { cert.s.len() } else { cert.s.difference(&cert.x).len() };
    let limit = &cert.c * rational::integer(total);
    for comp in components(g, &cert.x)? {
        let weight = comp.intersection(&cert.s).len();
        if rational::integer(weight) > limit {
            return Ok(Err(Defect::HeavyComponent { component: comp, weight }));
        }
    }
    Ok(Ok(()))
}

/// Bitmask form of the separator test with `c = p/q`.
struct Balance<'a> {
    adj: &'a [Mask],
    all: Mask,
    p: u64,
    q: u64,
    starred: bool,
}

impl Balance<'_> {
    fn separates(&self, s: Mask, x: Mask) -> bool {
        let rest = s & !x;
        let total = if self.starred { bits::count(s) } else { bits::count(rest) } as u64;
        let alive = self.all & !x;
        let mut todo = rest;
        while todo != 0 {
            let comp = bits::flood(self.adj, alive, todo.trailing_zeros() as usize);
            let w = bits::count(comp & s) as u64;
            if w * self.q > self.p * total {
                return false;
            }
            todo &= !comp;
        }
        true
    }

    /// Smallest separator of size at most `max_k`, preferring earlier masks
    /// among equal sizes.
    fn smallest(&self, s: Mask, max_k: usize) -> Option<Mask> {
        let n = bits::count(self.all);
        (0..=max_k.min(n)).find_map(|size| {
            bits::subsets_of_size(self.all, size).into_iter().find(|&x| self.separates(s, x))
        })
    }
}

/// Smallest `X` (at most `max_k` vertices) separating `s` at balance `c`,
/// lexicographically least among the smallest.
pub fn min_separator(
    g: &Graph,
    s: &VertexSet,
    c: &Rational,
    starred: bool,
    max_k: usize,
) -> Result<Option<VertexSet>> {
    check_balance(c)?;
    g.check_set(s)?;
    let (p, q) = rational::small_parts(c)?;
    let bal = Balance { adj: g.masks("min_separator")?, all: bits::full(g.n()), p, q, starred };
    Ok(bal.smallest(s.to_mask(), max_k).map(VertexSet::from_mask))
}

/// An exact separation number and a set `S` that needs that many vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationNumber {
    pub value: usize,
    /// An `S` with no separator of size `value - 1`; `None` when `value = 0`.
    pub hardest: Option<VertexSet>,
}

/// Exact `sep_c` (or `sep*_c` when `starred`): the least `k` such that every
/// `S ⊆ V` has a `(k, S, c)`-separator.
///
/// For each `S` the recently successful separators are tried first; only
/// when they all fail is the exhaustive search run, and then only up to the
/// current best value.
pub fn sep_number(g: &Graph, c: &Rational, starred: bool, limits: &Budget) -> Result<SeparationNumber> {
    check_balance(c)?;
    budget("sep_number", g.n(), limits.separation.min(30))?;
    let (p, q) = rational::small_parts(c)?;
    let all = bits::full(g.n());
    let bal = Balance { adj: g.masks("sep_number")?, all, p, q, starred };
    let mut value = 0;
    let mut hardest = None;
    let mut cache: Vec<Mask> = Vec::new();
    const CACHE: usize = 48;
    for s in 0..=all {
        if let Some(i) = cache.iter().position(|&x| bits::count(x) <= value && bal.separates(s, x)) {
            let x = cache.remove(i);
            cache.insert(0, x);
            continue;
        }
        // need more than the cache offers: search up to the current value,
        // then beyond
        let found = match bal.smallest(s, value) {
            Some(x) => x,
            None => {
                let x = (value + 1..=g.n())
                    .find_map(|size| {
                        bits::subsets_of_size(all, size).into_iter().find(|&x| bal.separates(s, x))
                    })
                    .expect("X = V always separates");
                value = bits::count(x);
                hardest = Some(VertexSet::from_mask(s));
                x
            }
        };
        cache.insert(0, found);
        cache.truncate(CACHE);
    }
    Ok(SeparationNumber { value, hardest })
}

/// A `(width + 1, S, 1/2)`-separator read off a tree decomposition.
///
/// Works on a normalised copy. Each edge's bag intersection is tried as a
/// separator; if none works, every edge is oriented towards the side holding
/// the heavy component of `G` minus that intersection, and the bag of a sink
/// node separates.
pub fn separator_from_td(g: &Graph, s: &VertexSet, td: &TreeDecomposition) -> Result<VertexSet> {
    g.check_set(s)?;
    validate_td(g, td)?;
    let td = if td.is_normalised() { td.clone() } else { normalize_td(g, td)? };
    let half = rational::ratio(1, 2);
    let check = |x: &VertexSet| -> Result<Verdict> {
        is_separator(g, &SeparatorCert { x: x.clone(), s: s.clone(), c: half.clone(), variant: false })
    };
    if td.node_count() == 1 {
        return Ok(td.bags[0].clone());
    }
    let adj = td.adjacency()?;
    let (parent, order) = tree::rooted(&adj, 0);
    // vertices in bags of each rooted subtree
    let mut below: Vec<VertexSet> = td.bags.clone();
    for &x in order.iter().rev() {
        if let Some(p) = parent[x] {
            below[p] = below[p].union(&below[x]);
        }
    }
    let mut out_degree = vec![0usize; td.node_count()];
    for &x in &order[1..] {
        let p = parent[x].unwrap();
        let meet = td.bags[x].intersection(&td.bags[p]);
        match check(&meet)? {
            Ok(()) => return Ok(meet),
            Err(Defect::HeavyComponent { component, .. }) => {
                if component.is_subset(&below[x]) {
                    out_degree[p] += 1;
                } else {
                    out_degree[x] += 1;
                }
            }
            Err(d) => unreachable!("unexpected defect {d}"),
        }
    }
    let sink = (0..td.node_count()).find(|&z| out_degree[z] == 0).expect("a tree orientation has a sink");
    let x = td.bags[sink].clone();
    assert_eq!(check(&x)?, Ok(()), "sink bag fails to separate");
    Ok(x)
}

/// Groups the components of `g - x` into at most `max_parts` (2 or 3) parts,
/// each holding at most `1/2` (three parts) or `2/3` (two parts) of `s - x`.
///
/// Repeatedly merges the two lightest parts; the bound on single components
/// guarantees that the merged part stays within the limit.
pub fn partition_components(g: &Graph, x: &VertexSet, s: &VertexSet, max_parts: usize) -> Result<Vec<VertexSet>> {
    g.check_set(s)?;
    // within(w): w <= W/2 for three parts, w <= 2W/3 for two
    let total = s.difference(x).len();
    let within = |w: usize| match max_parts {
        3 => 2 * w <= total,
        _ => 3 * w <= 2 * total,
    };
    if max_parts != 2 && max_parts != 3 {
        return input(format!("max_parts must be 2 or 3, got {max_parts}"));
    }
    let mut parts: Vec<(usize, VertexSet)> = Vec::new();
    for comp in components(g, x)? {
        let w = comp.intersection(s).len();
        if !within(w) {
            return input(format!(
                "component {comp} holds {w} of {total} vertices of S - X, too many for {max_parts} parts"
            ));
        }
        parts.push((w, comp));
    }
    while parts.len() > max_parts {
        parts.sort_by_key(|a| (a.0, a.1.first()));
        let (w1, a) = parts.remove(0);
        let (w2, b) = parts.remove(0);
        assert!(within(w1 + w2), "two lightest parts exceed the bound");
        parts.push((w1 + w2, a.union(&b)));
    }
    let mut out: Vec<VertexSet> = parts.into_iter().map(|(_, p)| p).collect();
    out.sort_by_key(|p| p.first());
    Ok(out)
}
