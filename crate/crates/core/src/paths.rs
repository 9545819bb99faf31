//! Maximum families of vertex-disjoint `A`–`B` paths (Menger), realised as
//! unit vertex-capacity max-flow.

use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// A maximum family of pairwise vertex-disjoint `A`–`B` paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPaths {
    /// Each path is listed from its `A` end to its `B` end. A vertex of
    /// `A ∩ B` is the one-vertex path `[v]`.
    pub paths: Vec<Vec<usize>>,
}

impl DisjointPaths {
    pub fn count(&self) -> usize {
        self.paths.len()
    }
}

struct Arc {
    to: usize,
    cap: u8,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, from: usize, to: usize) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap: 1 });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// One BFS augmentation; returns false when no augmenting path exists.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut pred = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::from([source]);
        pred[source] = usize::MAX - 1;
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.arcs[a].to;
                if self.arcs[a].cap > 0 && pred[y] == usize::MAX {
                    pred[y] = a;
                    if y == sink {
                        let mut cur = sink;
                        while cur != source {
                            let a = pred[cur];
                            self.arcs[a].cap -= 1;
                            self.arcs[a ^ 1].cap += 1;
                            cur = self.arcs[a ^ 1].to;
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Forward arcs out of `x` that carry flow.
    fn used(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[x]
            .iter()
            .filter(|&&a| a % 2 == 0 && self.arcs[a].cap == 0)
            .map(|&a| self.arcs[a].to)
    }
}

/// Maximum number of vertex-disjoint `a`–`b` paths whose internal vertices
/// avoid `forbidden_internal`, with a witness family.
///
/// Endpoints are always allowed, even when forbidden. Vertices of `a ∩ b`
/// are served by one-vertex paths. Neighbours are scanned in ascending
/// order, so the witness is deterministic.
pub fn disjoint_paths(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    forbidden_internal: &VertexSet,
) -> Result<DisjointPaths> {
    g.check_set(a)?;
    g.check_set(b)?;
    g.check_set(forbidden_internal)?;
    let n = g.n();

    // Some maximum family uses every vertex of a ∩ b as a trivial path and
    // otherwise consists of paths meeting a and b only at their ends.
    let both = a.intersection(b);
    let starts = a.difference(&both);
    let ends = b.difference(&both);

    #[derive(Clone, Copy, PartialEq)]
    enum Role {
        Start,
        End,
        Free,
        Blocked,
    }
    let role: Vec<Role> = (0..n)
        .map(|v| {
            if starts.contains(v) {
                Role::Start
            } else if ends.contains(v) {
                Role::End
            } else if both.contains(v) || forbidden_internal.contains(v) {
                Role::Blocked
            } else {
                Role::Free
            }
        })
        .collect();

    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = Network::new(2 * n + 2);
    for v in 0..n {
        if role[v] == Role::Blocked {
            continue;
        }
        if role[v] == Role::Start {
            net.add(source, 2 * v);
        }
        net.add(2 * v, 2 * v + 1);
        if role[v] == Role::End {
            net.add(2 * v + 1, sink);
        }
        if matches!(role[v], Role::Start | Role::Free) {
            for &w in g.neighbors(v) {
                if matches!(role[w], Role::End | Role::Free) {
                    net.add(2 * v + 1, 2 * w);
                }
            }
        }
    }
    while net.augment(source, sink) {}

    let mut paths: Vec<Vec<usize>> = both.iter().map(|v| vec![v]).collect();
    for first in net.used(source).collect::<Vec<_>>() {
        let mut path = Vec::new();
        let mut node = first;
        loop {
            let v = node / 2;
            path.push(v);
            let next = net
                .used(2 * v + 1)
                .next()
                .expect("unit flow leaves every saturated vertex");
            if next == sink {
                break;
            }
            node = next;
        }
        paths.push(path);
    }
    paths.sort();
    Ok(DisjointPaths { paths })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn check_family(g: &Graph, a: &VertexSet, b: &VertexSet, forb: &VertexSet, fam: &DisjointPaths) {
        let mut used = VertexSet::new();
        for p in &fam.paths {
            assert!(a.contains(p[0]) && b.contains(*p.last().unwrap()));
            for w in p.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
            if p.len() > 2 {
                for &v in &p[1..p.len() - 1] {
                    assert!(!forb.contains(v));
                }
            }
            for &v in p {
                assert!(used.insert(v), "paths share vertex {v}");
            }
        }
    }

    #[test]
    fn k4_two_paths() {
        let g = Graph::complete(4).unwrap();
        let (a, b) = (VertexSet::from([0, 1]), VertexSet::from([2, 3]));
        let fam = disjoint_paths(&g, &a, &b, &VertexSet::new()).unwrap();
        assert_eq!(fam.count(), 2);
        check_family(&g, &a, &b, &VertexSet::new(), &fam);
    }

    #[test]
    fn path_single() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let fam = disjoint_paths(&g, &VertexSet::from([0]), &VertexSet::from([3]), &VertexSet::new()).unwrap();
        assert_eq!(fam.paths, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn c4_forbidden_detour() {
        let g = c4();
        let forb = VertexSet::from([1]);
        let fam = disjoint_paths(&g, &VertexSet::from([0]), &VertexSet::from([2]), &forb).unwrap();
        assert_eq!(fam.paths, vec![vec![0, 3, 2]]);
    }

    #[test]
    fn intersection_gives_singletons() {
        let g = c4();
        let a = VertexSet::from([0, 1]);
        let b = VertexSet::from([1, 2]);
        let fam = disjoint_paths(&g, &a, &b, &VertexSet::new()).unwrap();
        assert_eq!(fam.count(), 2);
        assert!(fam.paths.contains(&vec![1]));
        check_family(&g, &a, &b, &VertexSet::new(), &fam);
    }

    #[test]
    fn forbidden_endpoints_still_usable() {
        let g = c4();
        let a = VertexSet::from([0]);
        let b = VertexSet::from([1]);
        let fam = disjoint_paths(&g, &a, &b, &VertexSet::from([0, 1])).unwrap();
        assert_eq!(fam.paths, vec![vec![0, 1]]);
    }
}
