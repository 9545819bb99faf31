use crate::bits::{self, Mask};
use crate::budget::Budget;
use crate::error::{budget, Result};
use crate::graph::{Graph, VertexSet};
use crate::model::{clique_model, Model};

struct Search<'a> {
    adj: &'a [Mask],
    verts: Vec<usize>,
    // suffix[i]: vertices verts[i..]
    suffix: Vec<Mask>,
    parts: Vec<Mask>,
    best: Vec<Mask>,
}

impl Search<'_> {
    /// Every part can still become connected using unassigned vertices, and
    /// any two parts that can no longer grow are already adjacent.
    fn viable(&self, future: Mask) -> bool {
        let mut closed: Vec<Mask> = Vec::new();
        for &p in &self.parts {
            if bits::flood(self.adj, p | future, bits::lowest(p)) & p != p {
                return false;
            }
            let around = bits::neighbourhood(self.adj, p);
            if around & future == 0 {
                if closed.iter().any(|&q| around & q == 0) {
                    return false;
                }
                closed.push(p);
            }
        }
        true
    }

    fn go(&mut self, i: usize) {
        if self.parts.len() + (self.verts.len() - i) <= self.best.len() {
            return;
        }
        if i == self.verts.len() {
            self.best = self.parts.clone();
            return;
        }
        let v = bits::bit(self.verts[i]);
        let future = self.suffix[i + 1];
        self.parts.push(v);
        if self.viable(future) {
            self.go(i + 1);
        }
        self.parts.pop();
        for j in 0..self.parts.len() {
            self.parts[j] |= v;
            if self.viable(future) {
                self.go(i + 1);
            }
            self.parts[j] &= !v;
        }
    }
}

/// Largest `t` such that `g` has a `K_t` minor, with a model.
///
/// Within a connected component every vertex outside a clique model can be
/// absorbed into an adjacent branch set, so it suffices to search partitions
/// of each component into connected, pairwise adjacent parts.
pub fn hadwiger_number(g: &Graph, limits: &Budget) -> Result<(usize, Model)> {
    budget("hadwiger_number", g.n(), limits.hadwiger.min(bits::MAX_MASK_VERTICES))?;
    let adj = g.masks("hadwiger_number")?;
    let mut best: Vec<Mask> = Vec::new();
    for comp in bits::components(adj, bits::full(g.n())) {
        let verts: Vec<usize> = bits::iter(comp).collect();
        let mut suffix = vec![0; verts.len() + 1];
        for i in (0..verts.len()).rev() {
            suffix[i] = suffix[i + 1] | bits::bit(verts[i]);
        }
        let mut s = Search { adj, verts, suffix, parts: Vec::new(), best: best.clone() };
        s.go(0);
        best = s.best;
    }
    let branches: Vec<VertexSet> = best.into_iter().map(VertexSet::from_mask).collect();
    Ok((branches.len(), clique_model(g, branches)?))
}
