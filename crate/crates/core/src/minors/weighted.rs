use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::budget::Budget;
use crate::certificates::{validate_bramble, Bramble, Verdict};
use crate::error::{budget, input, Defect, Result};
use crate::graph::{cartesian_with_k2, Graph, VertexSet};
use crate::lp;
use crate::model::{validate_model, Model};
use crate::rational::{integer, ratio, vec_as_string, Rational};

/// A bramble with a non-negative weight on each element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedBramble {
    pub bramble: Bramble,
    #[serde(with = "vec_as_string")]
    pub weights: Vec<Rational>,
}

impl WeightedBramble {
    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }
}

/// Checks the bramble, that weights are non-negative (and multiples of
/// `1/r` when `r` is given) and that no vertex carries more than weight 1.
pub fn validate_weighted_bramble(g: &Graph, wb: &WeightedBramble, r: Option<usize>) -> Result<Verdict> {
    if wb.weights.len() != wb.bramble.elements.len() {
        return input("one weight per bramble element required");
    }
    if r == Some(0) {
        return input("r must be positive");
    }
    if let Err(d) = validate_bramble(g, &wb.bramble)? {
        return Ok(Err(d));
    }
    for (i, w) in wb.weights.iter().enumerate() {
        let off_grid = r.is_some_and(|r| !(w * integer(r)).is_integer());
        if w.is_negative() || off_grid {
            return Ok(Err(Defect::BadWeight(i)));
        }
    }
    let mut load = vec![Rational::zero(); g.n()];
    for (e, w) in wb.bramble.elements.iter().zip(&wb.weights) {
        for v in e.iter() {
            load[v] += w;
        }
    }
    if let Some((vertex, l)) = load.iter().enumerate().find(|(_, l)| **l > Rational::one()) {
        return Ok(Err(Defect::Overloaded { vertex, load: l.to_string() }));
    }
    Ok(Ok(()))
}

/// Projects each branch set of a clique model in `g □ K_2` onto `g` and
/// gives every projection weight `⌊r/2⌋/r`. Projections of distinct branch
/// sets may coincide and are all kept.
pub fn weighted_bramble_from_product_model(g: &Graph, m: &Model, r: usize) -> Result<WeightedBramble> {
    if r < 2 {
        return input("r must be at least 2");
    }
    if m.host != cartesian_with_k2(g) {
        return input("model host is not g □ K_2");
    }
    if !m.pattern.is_complete() {
        return input("model pattern is not a clique");
    }
    validate_model(m)??;
    let n = g.n();
    let elements: Vec<VertexSet> = m.branches.iter().map(|b| b.iter().map(|v| v % n).collect()).collect();
    let w = ratio((r / 2) as i64, r as i64);
    Ok(WeightedBramble { weights: vec![w; elements.len()], bramble: Bramble { elements } })
}

/// Optimal weights on the elements of `b` under unit vertex load, restricted
/// to multiples of `1/r` when `r` is given.
pub fn optimal_weights(g: &Graph, b: &Bramble, r: Option<usize>) -> Result<WeightedBramble> {
    validate_bramble(g, b)??;
    if r == Some(0) {
        return input("r must be positive");
    }
    let mut used: Vec<usize> = b.elements.iter().flat_map(|e| e.iter()).collect();
    used.sort_unstable();
    used.dedup();
    let a: Vec<Vec<Rational>> = used
        .iter()
        .map(|&v| b.elements.iter().map(|e| if e.contains(v) { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let c = vec![Rational::one(); b.elements.len()];
    let weights = match r {
        None => lp::maximize(&a, &vec![Rational::one(); used.len()], &c)?.x,
        Some(r) => {
            let scale = integer(r);
            let sol = lp::maximize_integer(&a, &vec![scale.clone(); used.len()], &c)?;
            sol.x.into_iter().map(|y| y / &scale).collect()
        }
    };
    Ok(WeightedBramble { bramble: b.clone(), weights })
}

/// The fractional order of a bramble: the optimum of the weight LP.
pub fn fractional_order(g: &Graph, b: &Bramble) -> Result<Rational> {
    Ok(optimal_weights(g, b, None)?.total())
}

fn bk(adj: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let mut pivot = 0;
    let mut most = -1i64;
    let mut rest = p | x;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let c = (p & adj[u]).count_ones() as i64;
        if c > most {
            most = c;
            pivot = u;
        }
    }
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let b = 1u128 << v;
        bk(adj, r | b, p & adj[v], x & adj[v], out);
        p &= !b;
        x |= b;
    }
}

/// Largest connected-set count for which the touch graph fits a `u128`.
const MAX_FRACTIONAL_VERTICES: usize = 7;

/// `had_f(g)`, or `had_r(g)` when `r` is given, with an optimal weighted
/// bramble.
///
/// Weight can always be moved from an element to a connected subset that
/// still touches the rest, so the optimum is attained on the inclusion-minimal
/// members of some maximal pairwise-touching family of connected sets. Those
/// families are found as maximal cliques of the touch graph.
pub fn had_f_small(g: &Graph, r: Option<usize>, limits: &Budget) -> Result<(Rational, WeightedBramble)> {
    budget("had_f_small", g.n(), limits.fractional_hadwiger.min(MAX_FRACTIONAL_VERTICES))?;
    if r == Some(0) {
        return input("r must be positive");
    }
    let adj = g.masks("had_f_small")?;
    let sets: Vec<Mask> = (1..=bits::full(g.n())).filter(|&s| bits::is_connected(adj, s)).collect();
    let touch = |a: Mask, b: Mask| a & b != 0 || bits::neighbourhood(adj, a) & b != 0;
    let tadj: Vec<u128> = sets
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            sets.iter()
                .enumerate()
                .filter(|&(j, &b)| i != j && touch(a, b))
                .fold(0u128, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    let all = if sets.len() == 128 { u128::MAX } else { (1u128 << sets.len()) - 1 };
    let mut cliques = Vec::new();
    bk(&tadj, 0, all, 0, &mut cliques);
    let families: BTreeSet<Vec<Mask>> = cliques
        .into_iter()
        .map(|c| {
            let members: Vec<Mask> = (0..sets.len()).filter(|&i| c >> i & 1 == 1).map(|i| sets[i]).collect();
            members.iter().copied().filter(|&a| !members.iter().any(|&b| b != a && b & a == b)).collect()
        })
        .collect();
    let mut best: Option<WeightedBramble> = None;
    for fam in families {
        let b = Bramble { elements: fam.into_iter().map(VertexSet::from_mask).collect() };
        let wb = optimal_weights(g, &b, r)?;
        if best.as_ref().is_none_or(|w| wb.total() > w.total()) {
            best = Some(wb);
        }
    }
    let best = best.expect("a graph has at least one connected set");
    Ok((best.total(), best))
}
