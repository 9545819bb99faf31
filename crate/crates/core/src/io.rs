//! PACE `.gr` / `.td` text formats and the JSON certificate interchange.
//!
//! Both PACE formats are 1-based. Emitters are canonical: bags and edges are
//! sorted, so `emit(parse(emit(x))) == emit(x)` byte for byte.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::certificates::{bramble_order, validate_tangle, Bramble, Tangle};
use crate::decomp::{validate_bd, validate_td, BranchDecomposition, TreeDecomposition};
use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::minors::{validate_glm, validate_weighted_bramble, GridLikeMinorCert, WeightedBramble};
use crate::model::{validate_model, Model};
use crate::separators::{is_separator, SeparatorCert};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, w)| !w.is_empty() && w[0] != "c")
}

fn number(line: usize, word: &str) -> Result<usize> {
    word.parse().or_else(|_| parse_err(line, format!("expected a non-negative integer, found `{word}`")))
}

/// A 1-based index in `1..=bound`, returned 0-based.
fn index(line: usize, word: &str, bound: usize, what: &str) -> Result<usize> {
    let v = number(line, word)?;
    if v == 0 || v > bound {
        return parse_err(line, format!("{what} {v} out of range 1..={bound}"));
    }
    Ok(v - 1)
}

pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "missing `p tw` header");
    };
    if header.len() != 4 || header[0] != "p" || header[1] != "tw" {
        return parse_err(hl, "header must be `p tw <n> <m>`");
    }
    let n = number(hl, header[2])?;
    let m = number(hl, header[3])?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, words) in lines {
        if words.len() != 2 {
            return parse_err(ln, "edge line must be `<u> <v>`");
        }
        let u = index(ln, words[0], n, "vertex")?;
        let v = index(ln, words[1], n, "vertex")?;
        if u == v {
            return parse_err(ln, "self-loop");
        }
        edges.push((u, v));
        last = ln;
    }
    if edges.len() != m {
        return parse_err(last, format!("header announces {m} edges, found {}", edges.len()));
    }
    Graph::new(n, edges).map_err(|e| Error::Parse { line: hl, msg: e.to_string() })
}

pub fn emit_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses a `.td` file. Structural validity against a graph is left to
/// [`validate_td`].
pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "missing `s td` header");
    };
    if header.len() != 5 || header[0] != "s" || header[1] != "td" {
        return parse_err(hl, "header must be `s td <bags> <max bag size> <n>`");
    }
    let count = number(hl, header[2])?;
    let claimed_max = number(hl, header[3])?;
    let n = number(hl, header[4])?;
    let mut bags: Vec<Option<VertexSet>> = vec![None; count];
    let mut edges = Vec::new();
    let mut last = hl;
    for (ln, words) in lines {
        last = ln;
        if words[0] == "b" {
            if words.len() < 2 {
                return parse_err(ln, "bag line must be `b <id> <vertices...>`");
            }
            let id = index(ln, words[1], count, "bag")?;
            if bags[id].is_some() {
                return parse_err(ln, format!("bag {} defined twice", id + 1));
            }
            let mut bag = VertexSet::new();
            for w in &words[2..] {
                bag.insert(index(ln, w, n, "vertex")?);
            }
            bags[id] = Some(bag);
        } else {
            if words.len() != 2 {
                return parse_err(ln, "tree edge line must be `<i> <j>`");
            }
            edges.push((index(ln, words[0], count, "bag")?, index(ln, words[1], count, "bag")?));
        }
    }
    let bags: Vec<VertexSet> = match bags.iter().position(Option::is_none) {
        Some(i) => return parse_err(last, format!("bag {} never defined", i + 1)),
        None => bags.into_iter().flatten().collect(),
    };
    let td = TreeDecomposition::new(bags, edges);
    if td.max_bag_size() != claimed_max {
        return parse_err(hl, format!("header claims max bag size {claimed_max}, found {}", td.max_bag_size()));
    }
    Ok(td)
}

pub fn emit_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", td.node_count(), td.max_bag_size(), n);
    for (i, bag) in td.bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag.iter() {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    let mut edges: Vec<(usize, usize)> = td.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    for (a, b) in edges {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// Any certificate the verifier understands, tagged by `kind` in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Bramble(Bramble),
    Tangle(Tangle),
    Separator(SeparatorCert),
    Model(Model),
    Td(TreeDecomposition),
    Bd(BranchDecomposition),
    Glm(GridLikeMinorCert),
    WeightedBramble(WeightedBramble),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Bramble(_) => "bramble",
            Certificate::Tangle(_) => "tangle",
            Certificate::Separator(_) => "separator",
            Certificate::Model(_) => "model",
            Certificate::Td(_) => "td",
            Certificate::Bd(_) => "bd",
            Certificate::Glm(_) => "glm",
            Certificate::WeightedBramble(_) => "weighted-bramble",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialise")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
    }
}

/// What a successful verification established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verified {
    pub kind: &'static str,
    /// The name of the certified quantity, such as `order` or `width`.
    pub measure: &'static str,
    pub value: String,
}

impl fmt::Display for Verified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} valid, {} {}", self.kind, self.measure, self.value)
    }
}

/// Checks a certificate against `g`. Validation failures come back as
/// [`Error::Invalid`] carrying the witness.
pub fn verify(cert: &Certificate, g: &Graph) -> Result<Verified> {
    let (measure, value) = match cert {
        Certificate::Bramble(b) => ("order", bramble_order(g, b)?.order.to_string()),
        Certificate::Tangle(t) => {
            validate_tangle(g, t)??;
            ("order", bramble_order(g, &t.as_bramble())?.order.to_string())
        }
        Certificate::Separator(s) => {
            is_separator(g, s)??;
            ("size", s.x.len().to_string())
        }
        Certificate::Model(m) => {
            if m.host != *g {
                return input("model host differs from the given graph");
            }
            validate_model(m)??;
            ("pattern vertices", m.pattern.n().to_string())
        }
        Certificate::Td(td) => ("width", validate_td(g, td)?.to_string()),
        Certificate::Bd(bd) => ("width", validate_bd(g, bd)?.to_string()),
        Certificate::Glm(c) => ("order", validate_glm(g, c)?.to_string()),
        Certificate::WeightedBramble(wb) => {
            validate_weighted_bramble(g, wb, None)??;
            ("total weight", wb.total().to_string())
        }
    };
    Ok(Verified { kind: cert.kind(), measure, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::grid_bramble;
    use crate::families;

    #[test]
    fn gr_basics() {
        let g = parse_gr("c hello\np tw 2 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
        let messy = "p tw 4 3\nc comment\n3 2\n\n2 1\n4 3\n";
        let canon = emit_gr(&parse_gr(messy).unwrap());
        assert_eq!(canon, "p tw 4 3\n1 2\n2 3\n3 4\n");
        assert_eq!(emit_gr(&parse_gr(&canon).unwrap()), canon);
    }

    #[test]
    fn gr_errors_carry_lines() {
        let line = |t: &str| match parse_gr(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("p tw 2 1\n1 3\n"), 2);
        assert_eq!(line("p td 2 1\n1 2\n"), 1);
        assert_eq!(line("c x\np tw 2 2\n1 2\n"), 3);
        assert_eq!(line("p tw 2 1\n1 x\n"), 2);
        assert_eq!(line("p tw 2 1\n1 1\n"), 2);
        assert_eq!(line(""), 1);
    }

    #[test]
    fn td_round_trip() {
        let p4 = families::path(4).unwrap();
        let td = TreeDecomposition::new(vec![[0, 1].into(), [1, 2].into(), [2, 3].into()], vec![(1, 0), (1, 2)]);
        let text = emit_td(&td, 4);
        assert_eq!(text, "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n");
        let back = parse_td(&text).unwrap();
        assert_eq!(validate_td(&p4, &back).unwrap(), 1);
        assert_eq!(emit_td(&back, 4), text);
        assert!(matches!(parse_td("s td 2 2 4\nb 1 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_td("s td 1 3 4\nb 1 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_td("s td 1 2 4\nb 1 1 5\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn certificates_round_trip_and_verify() {
        let (g, b) = grid_bramble(3).unwrap();
        let cert = Certificate::Bramble(b);
        let json = cert.to_json();
        assert!(json.contains("\"kind\": \"bramble\""));
        let back = Certificate::from_json(&json).unwrap();
        assert_eq!(back, cert);
        assert_eq!(verify(&back, &g).unwrap().value, "4");
        let bad = Certificate::Bramble(Bramble { elements: vec![[0].into(), [8].into()] });
        assert!(matches!(verify(&bad, &g), Err(Error::Invalid(_))));
        assert!(matches!(Certificate::from_json("{\"kind\": \"nope\"}"), Err(Error::Parse { .. })));
    }
}
