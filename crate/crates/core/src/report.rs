//! Per-graph parameter table and the battery of inequalities tying the
//! parameters together.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::certificates::{bramble_order, tangle_from_bramble};
use crate::decomp::{exact_branchwidth, exact_treewidth};
use crate::error::{Error, Result};
use crate::graph::{cartesian_with_k2, Graph};
use crate::io::Certificate;
use crate::linkage::{bramble_from_linked_set, linkedness, well_linked_number};
use crate::minors::{had_f_small, hadwiger_number};
use crate::products::{model_in_cart_product, model_in_lex_product};
use crate::rational::{self, integer, ratio, Rational};
use crate::separators::sep_number;

/// A computed parameter, or the reason it is missing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Exact(Rational),
    BudgetExceeded,
    /// The oracle rejected the instance for a reason other than size.
    Unavailable(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Exact(v) => write!(f, "{v}"),
            ParamValue::BudgetExceeded => f.write_str("budget-exceeded"),
            ParamValue::Unavailable(why) => write!(f, "unavailable: {why}"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One inequality `lhs <= rhs` evaluated on the report's values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityVerdict {
    pub name: String,
    pub holds: bool,
    #[serde(with = "rational::as_string")]
    pub lhs: Rational,
    #[serde(with = "rational::as_string")]
    pub rhs: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParameterReport {
    pub graph: String,
    pub values: BTreeMap<String, ParamValue>,
    pub witnesses: BTreeMap<String, Certificate>,
    pub verdicts: Vec<InequalityVerdict>,
}

impl ParameterReport {
    pub fn value(&self, name: &str) -> Option<&Rational> {
        match self.values.get(name)? {
            ParamValue::Exact(v) => Some(v),
            _ => None,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &InequalityVerdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }

    fn set(&mut self, name: &str, v: usize) {
        self.values.insert(name.into(), ParamValue::Exact(integer(v)));
    }

    fn set_q(&mut self, name: &str, v: Rational) {
        self.values.insert(name.into(), ParamValue::Exact(v));
    }

    fn missing(&mut self, name: &str, e: Error) {
        let v = match e {
            Error::Budget { .. } => ParamValue::BudgetExceeded,
            other => ParamValue::Unavailable(other.to_string()),
        };
        self.values.insert(name.into(), v);
    }

    /// Records `lhs <= rhs` when both sides are known.
    fn check(&mut self, name: impl Into<String>, lhs: Option<Rational>, rhs: Option<Rational>) {
        if let (Some(lhs), Some(rhs)) = (lhs, rhs) {
            let holds = lhs <= rhs;
            self.verdicts.push(InequalityVerdict { name: name.into(), holds, lhs, rhs });
        }
    }
}

impl fmt::Display for ParameterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {}", self.graph)?;
        for (k, v) in &self.values {
            writeln!(f, "  {k} = {v}")?;
        }
        for v in &self.verdicts {
            let mark = if v.holds { "ok" } else { "VIOLATED" };
            writeln!(f, "  [{mark}] {}: {} <= {}", v.name, v.lhs, v.rhs)?;
        }
        Ok(())
    }
}

/// Computes every parameter the budget allows and evaluates the inequality
/// battery on them. Never fails: missing values are recorded as such and
/// the verdicts that need them are skipped.
pub fn parameter_report(id: &str, g: &Graph, limits: &Budget) -> ParameterReport {
    let mut rep = ParameterReport {
        graph: id.to_string(),
        values: BTreeMap::new(),
        witnesses: BTreeMap::new(),
        verdicts: Vec::new(),
    };
    rep.set("n", g.n());
    rep.set("m", g.m());

    match exact_treewidth(g, limits) {
        Ok((w, td)) => {
            rep.set("tw", w);
            rep.witnesses.insert("tw".into(), Certificate::Td(td));
        }
        Err(e) => rep.missing("tw", e),
    }
    match exact_branchwidth(g, limits) {
        Ok((w, bd)) => {
            rep.set("bw", w);
            if let Some(bd) = bd {
                rep.witnesses.insert("bw".into(), Certificate::Bd(bd));
            }
        }
        Err(e) => rep.missing("bw", e),
    }
    for (label, c) in [("1/2", ratio(1, 2)), ("2/3", ratio(2, 3))] {
        for starred in [false, true] {
            let name = format!("sep{}_{label}", if starred { "*" } else { "" });
            match sep_number(g, &c, starred, limits) {
                Ok(s) => rep.set(&name, s.value),
                Err(e) => rep.missing(&name, e),
            }
        }
    }
    let mut linked = None;
    match linkedness(g, limits) {
        Ok((k, s)) => {
            rep.set("link", k);
            linked = Some((k, s));
        }
        Err(e) => rep.missing("link", e),
    }
    match well_linked_number(g, limits) {
        Ok((k, _)) => rep.set("wl", k),
        Err(e) => rep.missing("wl", e),
    }
    if let Some((k, s)) = linked {
        let tangled = bramble_from_linked_set(g, &s, k, limits).and_then(|b| {
            let order = bramble_order(g, &b)?.order;
            rep.set("bn_lower", order);
            rep.witnesses.insert("bramble".into(), Certificate::Bramble(b.clone()));
            if order < 2 {
                return Ok(None);
            }
            let t = tangle_from_bramble(g, &b, order, limits)?;
            Ok(Some((bramble_order(g, &t.as_bramble())?.order, t)))
        });
        match tangled {
            Ok(Some((order, t))) => {
                rep.set("tn_lower", order);
                rep.witnesses.insert("tangle".into(), Certificate::Tangle(t));
            }
            Ok(None) => {}
            Err(e) => rep.missing(if rep.values.contains_key("bn_lower") { "tn_lower" } else { "bn_lower" }, e),
        }
    }
    if let Some(ParamValue::Exact(_)) = rep.values.get("tw") {
        let Some(Certificate::Td(td)) = rep.witnesses.get("tw").cloned() else { unreachable!() };
        match model_in_lex_product(g, &td) {
            Ok((_, k, m)) => {
                rep.set("ltp_upper", k);
                rep.witnesses.insert("ltp".into(), Certificate::Model(m));
            }
            Err(e) => rep.missing("ltp_upper", e),
        }
        match model_in_cart_product(g, limits) {
            Ok((_, k, m)) => {
                rep.set("ctp_upper", k);
                rep.witnesses.insert("ctp".into(), Certificate::Model(m));
            }
            Err(e) => rep.missing("ctp_upper", e),
        }
    }
    match hadwiger_number(g, limits) {
        Ok((t, m)) => {
            rep.set("had", t);
            rep.witnesses.insert("had".into(), Certificate::Model(m));
        }
        Err(e) => rep.missing("had", e),
    }
    match hadwiger_number(&cartesian_with_k2(g), limits) {
        Ok((t, _)) => rep.set("had_product", t),
        Err(e) => rep.missing("had_product", e),
    }
    for (name, r) in [("had_f", None), ("had_2", Some(2)), ("had_3", Some(3))] {
        match had_f_small(g, r, limits) {
            Ok((v, wb)) => {
                rep.set_q(name, v);
                if r.is_none() {
                    rep.witnesses.insert("had_f".into(), Certificate::WeightedBramble(wb));
                }
            }
            Err(e) => rep.missing(name, e),
        }
    }

    battery(&mut rep);
    rep
}

fn ceil(q: Rational) -> Rational {
    q.ceil()
}

fn battery(rep: &mut ParameterReport) {
    let get = |rep: &ParameterReport, name: &str| rep.value(name).cloned();
    let scaled = |v: Option<Rational>, f: Rational| v.map(|v| v * f);
    let tw = get(rep, "tw");
    let bn = tw.clone().map(|t| t + Rational::one());

    rep.check("bn_lower <= tw+1", get(rep, "bn_lower"), bn.clone());
    rep.check("tn_lower <= tw+1", get(rep, "tn_lower"), bn.clone());

    for (label, c) in [("1/2", ratio(1, 2)), ("2/3", ratio(2, 3))] {
        let sep = get(rep, &format!("sep_{label}"));
        let star = get(rep, &format!("sep*_{label}"));
        rep.check(format!("sep*_{label} <= sep_{label}"), star.clone(), sep.clone());
        rep.check(format!("sep_{label} <= tw+1"), sep, bn.clone());
        let factor = Rational::one() / (Rational::one() - c);
        rep.check(format!("tw+1 <= ceil(sep*_{label}/(1-c))"), bn.clone(), star.map(|s| ceil(s * factor)));
    }

    let bw = get(rep, "bw");
    if bw.as_ref().is_some_and(|b| *b >= integer(2)) {
        rep.check("bw <= tw+1", bw.clone(), bn.clone());
        rep.check("tw+1 <= ceil(3bw/2)", bn.clone(), bw.map(|b| ceil(b * ratio(3, 2))));
    }

    let ltp = get(rep, "ltp_upper");
    rep.check("ltp_upper <= tw+1", ltp.clone(), bn.clone());
    rep.check("tw+1 <= 2*ltp_upper", bn.clone(), scaled(ltp, integer(2)));
    let ctp = get(rep, "ctp_upper");
    rep.check("ctp_upper <= tw+1", ctp.clone(), bn.clone());
    rep.check("tw <= ctp_upper", tw, ctp);

    let link = get(rep, "link");
    let wl = get(rep, "wl");
    rep.check("link <= bn_lower", link.clone(), get(rep, "bn_lower"));
    rep.check("link <= tw+1", link.clone(), bn.clone());
    rep.check("tw+1 <= 2*link", bn.clone(), scaled(link.clone(), integer(2)));
    rep.check("tw+1 <= wl", bn.clone(), wl.clone());
    rep.check("wl <= 3*link", wl, scaled(link, integer(3)));

    let had = get(rep, "had");
    let had_f = get(rep, "had_f");
    let had_2 = get(rep, "had_2");
    let had_3 = get(rep, "had_3");
    let had_p = get(rep, "had_product");
    rep.check("had <= had_f", had.clone(), had_f.clone());
    rep.check("had <= tw+1", had, bn.clone());
    rep.check("had_2 <= had_f", had_2.clone(), had_f.clone());
    rep.check("had_3 <= had_f", had_3.clone(), had_f.clone());
    rep.check("had_f <= tw+1", had_f, bn);
    rep.check("had_product <= 2*had_2", had_p.clone(), scaled(had_2, integer(2)));
    rep.check("had_product <= 3*had_3", had_p, scaled(had_3, integer(3)));
}

/// Fails with the first violated inequality, for callers that treat a
/// violation as an error.
pub fn require_all_hold(rep: &ParameterReport) -> Result<()> {
    match rep.violations().next() {
        None => Ok(()),
        Some(v) => Err(Error::Invalid(crate::error::Defect::Other(format!(
            "{}: inequality {} fails ({} > {})",
            rep.graph, v.name, v.lhs, v.rhs
        )))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn p4_report() {
        let rep = parameter_report("P4", &families::path(4).unwrap(), &Budget::default());
        for (k, v) in [("tw", 1), ("bw", 2), ("sep_1/2", 2), ("link", 1), ("wl", 2), ("had", 2)] {
            assert_eq!(rep.value(k), Some(&integer(v)), "{k}");
        }
        assert!(rep.all_hold(), "{rep}");
        assert!(!rep.verdicts.is_empty());
    }

    #[test]
    fn k5_report() {
        let rep = parameter_report("K5", &Graph::complete(5).unwrap(), &Budget::default());
        for (k, v) in [("tw", 4), ("sep_1/2", 5), ("link", 3), ("wl", 5), ("had", 5), ("had_f", 5)] {
            assert_eq!(rep.value(k), Some(&integer(v)), "{k}");
        }
        assert!(rep.all_hold(), "{rep}");
    }

    #[test]
    fn single_vertex_and_budget() {
        let rep = parameter_report("K1", &Graph::edgeless(1).unwrap(), &Budget::default());
        assert!(rep.all_hold(), "{rep}");
        assert_eq!(rep.value("tw"), Some(&integer(0)));
        let big = parameter_report("P30", &families::path(30).unwrap(), &Budget::default());
        assert_eq!(big.values["tw"], ParamValue::BudgetExceeded);
        assert!(big.verdicts.is_empty());
        let json = serde_json::to_string(&big).unwrap();
        assert!(json.contains("budget-exceeded"));
    }
}
