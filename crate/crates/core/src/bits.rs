//! Bitmask helpers for the exponential oracles. Every routine here assumes
//! at most 64 vertices; callers gate on that through their budgets.

pub(crate) type Mask = u64;

pub(crate) const MAX_MASK_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1u64 << v
}

#[inline]
pub(crate) fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn iter(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn count(m: Mask) -> usize {
    m.count_ones() as usize
}

#[inline]
pub(crate) fn lowest(m: Mask) -> usize {
    m.trailing_zeros() as usize
}

/// Union of the neighbourhoods of every vertex in `set`.
pub(crate) fn neighbourhood(adj: &[Mask], set: Mask) -> Mask {
    iter(set).fold(0, |acc, v| acc | adj[v])
}

/// The set of vertices of `alive` reachable from `start` inside `alive`.
pub(crate) fn flood(adj: &[Mask], alive: Mask, start: usize) -> Mask {
    let mut comp = bit(start) & alive;
    let mut frontier = comp;
    while frontier != 0 {
        let next = neighbourhood(adj, frontier) & alive & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

/// Components of the subgraph induced by `alive`, ordered by minimum vertex.
pub(crate) fn components(adj: &[Mask], alive: Mask) -> Vec<Mask> {
    let mut out = Vec::new();
    let mut rest = alive;
    while rest != 0 {
        let c = flood(adj, alive, lowest(rest));
        out.push(c);
        rest &= !c;
    }
    out
}

pub(crate) fn is_connected(adj: &[Mask], set: Mask) -> bool {
    set != 0 && flood(adj, set, lowest(set)) == set
}

/// All `k`-subsets of `universe`, in increasing numeric order of their masks.
pub(crate) fn subsets_of_size(universe: Mask, k: usize) -> Vec<Mask> {
    let elems: Vec<usize> = iter(universe).collect();
    let mut out = Vec::new();
    if k > elems.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0, |m, &i| m | bit(elems[i])));
        // advance the combination, rightmost index first
        let mut i = k;
        loop {
            if i == 0 {
                out.sort_unstable();
                return out;
            }
            i -= 1;
            if idx[i] < elems.len() - (k - i) {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
