//! Deterministic graph generators.
//!
//! Randomised kinds draw from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)` and consume raw `next_u64` outputs only:
//!
//! * `random_tree(n)`: vertex `v` in `1..n` attaches to parent `next_u64() % v`.
//! * `gnp(n, p/q)`: pairs `(u, v)`, `u < v`, in lexicographic order; the edge is
//!   present iff `next_u64() % q < p`.
//!
//! Any implementation of ChaCha8 with the same seeding regenerates the corpus.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{input, Error, Result};
use crate::graph::Graph;

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Clique `A` of size `n` plus independent `B` of size `k*n`.
    Psi { n: usize, k: usize },
    /// `rows x cols` grid, row-major ids.
    Grid { rows: usize, cols: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `K_{n,n}` without the matching `(i, n+i)`.
    KnMinusMatching { n: usize },
    Path { n: usize },
    RandomTree { n: usize, seed: u64 },
    /// Erdős–Rényi with edge probability `num/den`.
    Gnp { n: usize, num: u64, den: u64, seed: u64 },
}

/// `ψ_{n,k}`: vertices `0..n` form the clique `A`, vertices `n..n+kn` the
/// independent set `B`. Vertex `a` of `A` is paired with `n+ak .. n+ak+k-1`
/// and adjacent to every other vertex of `B`.
pub fn psi(n: usize, k: usize) -> Result<Graph> {
    if n < 2 || k < 1 {
        return input(format!("psi needs n >= 2 and k >= 1, got n={n} k={k}"));
    }
    let mut edges = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.insert((u, v));
        }
        let paired = n + u * k..n + u * k + k;
        for b in n..n + k * n {
            if !paired.contains(&b) {
                edges.insert((u, b));
            }
        }
    }
    Ok(Graph::from_edge_set(n + k * n, edges))
}

pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return input("grid dimensions must be positive");
    }
    let mut edges = BTreeSet::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.insert((v, v + 1));
            }
            if r + 1 < rows {
                edges.insert((v, v + cols));
            }
        }
    }
    Ok(Graph::from_edge_set(rows * cols, edges))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a + b == 0 {
        return input("complete bipartite graph needs a vertex");
    }
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn kn_minus_matching(n: usize) -> Result<Graph> {
    if n == 0 {
        return input("kn_minus_matching needs n >= 1");
    }
    Graph::new(
        2 * n,
        (0..n).flat_map(|u| (0..n).filter(move |&j| j != u).map(move |j| (u, n + j))),
    )
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::new(n, (1..n).map(|v| ((rng.next_u64() % v as u64) as usize, v)))
}

pub fn gnp(n: usize, num: u64, den: u64, seed: u64) -> Result<Graph> {
    if den == 0 || num > den {
        return input(format!("gnp probability {num}/{den} outside [0,1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_u64() % den < num {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Builds the graph a spec describes.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Psi { n, k } => psi(n, k),
        FamilySpec::Grid { rows, cols } => grid(rows, cols),
        FamilySpec::Complete { n } => Graph::complete(n),
        FamilySpec::CompleteBipartite { a, b } => complete_bipartite(a, b),
        FamilySpec::KnMinusMatching { n } => kn_minus_matching(n),
        FamilySpec::Path { n } => path(n),
        FamilySpec::RandomTree { n, seed } => random_tree(n, seed),
        FamilySpec::Gnp { n, num, den, seed } => gnp(n, num, den, seed),
    }
}

/// The fixed test corpus: 200 random graphs `gnp(2 + i % 7, d_i, seed = i)`
/// with `d_i` cycling through 1/4, 1/2, 3/4, the `k × k` grids for
/// `k = 2..=4`, and `ψ_{3,2}`.
pub fn standard_corpus() -> Vec<FamilySpec> {
    let densities = [(1, 4), (1, 2), (3, 4)];
    let mut out: Vec<FamilySpec> = (0..200u64)
        .map(|i| {
            let (num, den) = densities[(i % 3) as usize];
            FamilySpec::Gnp { n: 2 + (i % 7) as usize, num, den, seed: i }
        })
        .collect();
    out.extend((2..=4).map(|k| FamilySpec::Grid { rows: k, cols: k }));
    out.push(FamilySpec::Psi { n: 3, k: 2 });
    out
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Psi { n, k } => write!(f, "psi:{n},{k}"),
            FamilySpec::Grid { rows, cols } => write!(f, "grid:{rows},{cols}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "complete_bipartite:{a},{b}"),
            FamilySpec::KnMinusMatching { n } => write!(f, "kn_minus_matching:{n}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::RandomTree { n, seed } => write!(f, "random_tree:{n},seed={seed}"),
            FamilySpec::Gnp { n, num, den, seed } => write!(f, "gnp:{n},{num}/{den},seed={seed}"),
        }
    }
}

/// Splits `kind:a,b,seed=s` into the kind, positional arguments and seed.
fn split_spec(s: &str) -> Result<(&str, Vec<&str>, Option<&str>)> {
    let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
    let mut args = Vec::new();
    let mut seed = None;
    for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.strip_prefix("seed=") {
            Some(v) => seed = Some(v),
            None => args.push(part),
        }
    }
    if kind.is_empty() {
        return input(format!("empty family spec {s:?}"));
    }
    Ok((kind.trim(), args, seed))
}

fn int<T: FromStr>(s: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Input(format!("expected an integer, got {s:?}")))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, args, seed) = split_spec(s)?;
        let seed = seed.map(int::<u64>).transpose()?;
        let want = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                input(format!("{kind} takes {k} parameter(s), got {}", args.len()))
            }
        };
        let spec = match kind {
            "psi" => {
                want(2)?;
                FamilySpec::Psi { n: int(args[0])?, k: int(args[1])? }
            }
            "grid" => {
                want(2)?;
                FamilySpec::Grid { rows: int(args[0])?, cols: int(args[1])? }
            }
            "complete" => {
                want(1)?;
                FamilySpec::Complete { n: int(args[0])? }
            }
            "complete_bipartite" => {
                want(2)?;
                FamilySpec::CompleteBipartite { a: int(args[0])?, b: int(args[1])? }
            }
            "kn_minus_matching" => {
                want(1)?;
                FamilySpec::KnMinusMatching { n: int(args[0])? }
            }
            "path" => {
                want(1)?;
                FamilySpec::Path { n: int(args[0])? }
            }
            "random_tree" => {
                want(1)?;
                FamilySpec::RandomTree { n: int(args[0])?, seed: seed.unwrap_or(0) }
            }
            "gnp" => {
                want(2)?;
                let (num, den) = match args[1].split_once('/') {
                    Some((p, q)) => (int(p)?, int(q)?),
                    None => (int(args[1])?, 1),
                };
                FamilySpec::Gnp { n: int(args[0])?, num, den, seed: seed.unwrap_or(0) }
            }
            other => return input(format!("unknown family {other:?}")),
        };
        spec.check()?;
        Ok(spec)
    }
}

impl FamilySpec {
    /// The same spec with its seed replaced; deterministic kinds are unchanged.
    pub fn with_seed(self, seed: u64) -> Self {
        match self {
            FamilySpec::RandomTree { n, .. } => FamilySpec::RandomTree { n, seed },
            FamilySpec::Gnp { n, num, den, .. } => FamilySpec::Gnp { n, num, den, seed },
            other => other,
        }
    }

    fn check(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Psi { n, k } => n >= 2 && k >= 1,
            FamilySpec::Grid { rows, cols } => rows >= 1 && cols >= 1,
            FamilySpec::Complete { n }
            | FamilySpec::KnMinusMatching { n }
            | FamilySpec::Path { n }
            | FamilySpec::RandomTree { n, .. } => n >= 1,
            FamilySpec::CompleteBipartite { a, b } => a >= 1 && b >= 1,
            FamilySpec::Gnp { n, num, den, .. } => n >= 1 && den >= 1 && num <= den,
        };
        if ok {
            Ok(())
        } else {
            input(format!("invalid parameters in {self}"))
        }
    }
}

/// Expands a spec whose integer fields may be inclusive ranges `a..b`, e.g.
/// `psi:3..4,2` or `gnp:6,1/2,seed=0..9`, into concrete specs in
/// lexicographic order of the positional arguments (seed varying fastest).
pub fn expand_range(s: &str) -> Result<Vec<FamilySpec>> {
    let (kind, args, seed) = split_spec(s)?;
    let mut fields: Vec<Vec<String>> = Vec::new();
    for part in args.iter().copied().chain(seed) {
        let values = match part.split_once("..") {
            Some((lo, hi)) if !part.contains('/') => {
                let (lo, hi): (u64, u64) = (int(lo)?, int(hi)?);
                if lo > hi {
                    return input(format!("empty range {part}"));
                }
                (lo..=hi).map(|v| v.to_string()).collect()
            }
            _ => vec![part.to_string()],
        };
        fields.push(values);
    }
    let mut combos: Vec<Vec<String>> = vec![Vec::new()];
    for values in &fields {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    let positional = args.len();
    combos
        .into_iter()
        .map(|vals| {
            let mut text = format!("{kind}:{}", vals[..positional].join(","));
            if seed.is_some() {
                text.push_str(&format!(",seed={}", vals[positional]));
            }
            text.parse()
        })
        .collect()
}
