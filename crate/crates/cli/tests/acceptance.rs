//! Acceptance suite: one PASS/FAIL line per criterion, each within its
//! runtime limit. Exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use twtie_core::certificates::{bramble_order, grid_bramble, tangle_from_bramble, validate_bramble, validate_tangle};
use twtie_core::decomp::{
    bd_to_td, exact_branchwidth, exact_treewidth, normalize_td, td_to_bd, validate_bd,
    validate_td,
};
use twtie_core::families::{self, generate, standard_corpus};
use twtie_core::io::{emit_gr, emit_td, parse_gr, parse_td, verify};
use twtie_core::linkage::{bramble_from_linked_set, is_well_linked, linkedness, well_linked_number};
use twtie_core::minors::{
    glm_from_grid, had_f_small, hadwiger_number, model_in_product_from_glm, validate_glm, validate_weighted_bramble,
    weighted_bramble_from_product_model,
};
use twtie_core::model::validate_model;
use twtie_core::products::{
    cart_product_tree, lex_product, model_in_cart_product, model_in_lex_product, td_of_cart_product, TreeGraph,
};
use twtie_core::rational::{integer, ratio, Rational};
use twtie_core::report::parameter_report;
use twtie_core::separators::{is_separator, sep_number, separator_from_td, SeparatorCert};
use twtie_core::{cartesian_with_k2, Budget, Certificate, Graph, TreeDecomposition, VertexSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, ctx: impl FnOnce() -> String) -> Result<T, String> {
    r.map_err(|e| format!("{}: {e}", ctx()))
}

fn limits() -> Budget {
    Budget {
        treewidth: 16,
        branchwidth: 12,
        separation: 16,
        linkedness: 16,
        well_linked: 9,
        hadwiger: 12,
        fractional_hadwiger: 6,
        subsets: 20,
    }
}

struct Instance {
    name: String,
    g: Graph,
    tw: usize,
    td: TreeDecomposition,
}

fn corpus() -> Vec<Instance> {
    let lim = limits();
    standard_corpus()
        .into_iter()
        .map(|spec| {
            let g = generate(&spec).expect("corpus spec");
            let (tw, td) = exact_treewidth(&g, &lim).expect("corpus within treewidth budget");
            Instance { name: spec.to_string(), g, tw, td }
        })
        .collect()
}

fn ceil_q(q: Rational) -> Rational {
    q.ceil()
}

/// AC1: constructed brambles never beat tw + 1; grid brambles are exact.
fn duality(corpus: &[Instance]) -> Outcome {
    let lim = limits();
    let mut checked = 0;
    for inst in corpus {
        let g = &inst.g;
        let mut brambles = Vec::new();
        if g.n() <= lim.linkedness {
            let (k, s) = ok(linkedness(g, &lim), || inst.name.clone())?;
            brambles.push(ok(bramble_from_linked_set(g, &s, k, &lim), || inst.name.clone())?);
        }
        if g.n() <= lim.hadwiger {
            let (_, m) = ok(hadwiger_number(g, &lim), || inst.name.clone())?;
            brambles.push(m.to_bramble());
        }
        for b in brambles {
            ok(validate_bramble(g, &b), || inst.name.clone())?.map_err(|d| format!("{}: {d}", inst.name))?;
            let order = ok(bramble_order(g, &b), || inst.name.clone())?.order;
            ensure(order <= inst.tw + 1, || format!("{}: bramble order {order} > tw+1 = {}", inst.name, inst.tw + 1))?;
            checked += 1;
        }
    }
    for k in 2..=4 {
        let (g, b) = ok(grid_bramble(k), || format!("grid_bramble({k})"))?;
        let order = ok(bramble_order(&g, &b), || format!("grid {k}"))?.order;
        let (tw, _) = ok(exact_treewidth(&g, &lim), || format!("grid {k}"))?;
        ensure(order == k + 1 && tw == k, || format!("grid {k}: order {order}, tw {tw}"))?;
    }
    Ok(format!("{checked} brambles, grid orders 3,4,5"))
}

/// AC2: normalisation keeps the width and yields uniform, one-swap bags.
fn normalisation(corpus: &[Instance]) -> Outcome {
    for inst in corpus {
        let td = ok(normalize_td(&inst.g, &inst.td), || inst.name.clone())?;
        let w = ok(validate_td(&inst.g, &td), || inst.name.clone())?;
        ensure(w == inst.tw, || format!("{}: width {w} != {}", inst.name, inst.tw))?;
        ensure(td.bags.iter().all(|b| b.len() == w + 1), || format!("{}: bag sizes differ", inst.name))?;
        for &(x, y) in &td.edges {
            let shared = td.bags[x].intersection(&td.bags[y]).len();
            ensure(shared == w, || format!("{}: bags {x},{y} share {shared}", inst.name))?;
        }
    }
    Ok(format!("{} decompositions", corpus.len()))
}

/// AC3: bw <= tw + 1 <= ⌈3bw/2⌉ and both conversions respect their bounds.
fn branchwidth(corpus: &[Instance]) -> Outcome {
    let lim = limits();
    let mut checked = 0;
    for inst in corpus.iter().filter(|i| i.g.m() <= 12 && i.g.m() >= 2) {
        let (g, name) = (&inst.g, &inst.name);
        let (bw, bd) = ok(exact_branchwidth(g, &lim), || name.clone())?;
        let bd = bd.expect("m >= 2");
        ensure(ok(validate_bd(g, &bd), || name.clone())? == bw, || format!("{name}: bd width"))?;
        let from_td = ok(td_to_bd(g, &inst.td), || name.clone())?;
        let w1 = ok(validate_bd(g, &from_td), || name.clone())?;
        ensure(w1 <= inst.tw + 1, || format!("{name}: td_to_bd width {w1} > tw+1"))?;
        let back = ok(bd_to_td(g, &bd), || name.clone())?;
        let w2 = ok(validate_td(g, &back), || name.clone())?;
        ensure(2 * (w2 + 1) <= 3 * bw.max(1) || bw < 2, || format!("{name}: bd_to_td width {w2}, bw {bw}"))?;
        if bw >= 2 {
            let tw1 = inst.tw + 1;
            ensure(bw <= tw1 && 2 * tw1 <= 3 * bw + 1, || format!("{name}: bw {bw}, tw+1 {tw1}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs with bw >= 2"))
}

/// AC4: the separation chain, and separators read off decompositions.
fn separators(corpus: &[Instance]) -> Outcome {
    let lim = limits();
    for inst in corpus.iter().filter(|i| i.g.n() <= 8) {
        let tw1 = integer(inst.tw + 1);
        for c in [ratio(1, 2), ratio(2, 3)] {
            let sep = integer(ok(sep_number(&inst.g, &c, false, &lim), || inst.name.clone())?.value);
            let star = integer(ok(sep_number(&inst.g, &c, true, &lim), || inst.name.clone())?.value);
            let top = ceil_q(&star / (integer(1) - &c));
            ensure(star <= sep && sep <= tw1 && tw1 <= top, || {
                format!("{} c={c}: sep* {star}, sep {sep}, tw+1 {tw1}, bound {top}", inst.name)
            })?;
        }
    }
    for j in 0..100usize {
        let inst = &corpus[(j * 2) % corpus.len()];
        let n = inst.g.n();
        let pattern = 2 * j + 1;
        let s: VertexSet = (0..n).filter(|&v| pattern >> (v % 8) & 1 == 1).collect();
        let x = ok(separator_from_td(&inst.g, &s, &inst.td), || inst.name.clone())?;
        ensure(x.len() <= inst.tw + 1, || format!("{}: separator of size {}", inst.name, x.len()))?;
        let cert = SeparatorCert { x, s, c: ratio(1, 2), variant: false };
        ok(is_separator(&inst.g, &cert), || inst.name.clone())?.map_err(|d| format!("{}: {d}", inst.name))?;
    }
    Ok("chain on corpus, 100 separators from decompositions".into())
}

/// AC5: sep_{1/2}(ψ_{4,3}) = 4, with X = A as witness and k = 3 refuted.
fn psi_tightness() -> Outcome {
    let lim = limits();
    let g = ok(families::psi(4, 3), || "psi".into())?;
    let half = ratio(1, 2);
    let sep = ok(sep_number(&g, &half, false, &lim), || "psi(4,3)".into())?;
    ensure(sep.value == 4, || format!("sep = {}", sep.value))?;
    let hard = sep.hardest.expect("value > 0");
    let a: VertexSet = (0..4).collect();
    let witness = SeparatorCert { x: a, s: hard.clone(), c: half.clone(), variant: false };
    ensure(is_separator(&g, &witness).unwrap().is_ok(), || "X = A does not separate the hardest S".into())?;
    // every X of size <= 3 fails for the hardest S
    let mut tried = 0;
    for size in 0..=3usize {
        for x in subsets(g.n(), size) {
            let cert = SeparatorCert { x, s: hard.clone(), c: half.clone(), variant: false };
            ensure(is_separator(&g, &cert).unwrap().is_err(), || format!("{} separates {hard}", cert.x))?;
            tried += 1;
        }
    }
    Ok(format!("S = {hard}, {tried} candidate X of size <= 3 refuted"))
}

fn subsets(n: usize, k: usize) -> Vec<VertexSet> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// AC6: linkedness of cliques and ψ_{3,2}, and link <= tw+1 <= 2 link.
fn linkage(corpus: &[Instance]) -> Outcome {
    let lim = limits();
    for n in [4, 6, 8] {
        let (k, _) = ok(linkedness(&Graph::complete(n).unwrap(), &lim), || format!("K_{n}"))?;
        ensure(k == n / 2, || format!("link(K_{n}) = {k}"))?;
    }
    let psi = families::psi(3, 2).unwrap();
    let (k, _) = ok(linkedness(&psi, &lim), || "psi".into())?;
    let (tw, _) = exact_treewidth(&psi, &lim).unwrap();
    ensure(k == 3 && tw + 1 == 3, || format!("link(psi_3,2) = {k}, tw = {tw}"))?;
    let mut checked = 0;
    for inst in corpus.iter().filter(|i| i.g.n() <= lim.linkedness) {
        let (k, _) = ok(linkedness(&inst.g, &lim), || inst.name.clone())?;
        ensure(k <= inst.tw + 1 && inst.tw < 2 * k, || format!("{}: link {k}, tw {}", inst.name, inst.tw))?;
        checked += 1;
    }
    Ok(format!("cliques, psi(3,2), chain on {checked} graphs"))
}

/// AC7: well-linked numbers, the K_{6,3} gap, and internal = external.
fn well_linked(corpus: &[Instance]) -> Outcome {
    let lim = limits();
    for n in 1..=5 {
        let (k, _) = ok(well_linked_number(&Graph::complete(n).unwrap(), &lim), || format!("K_{n}"))?;
        ensure(k == n, || format!("wl(K_{n}) = {k}"))?;
    }
    let k63 = families::complete_bipartite(6, 3).unwrap();
    let (wl, _) = ok(well_linked_number(&k63, &lim), || "K_6,3".into())?;
    let (tw, _) = exact_treewidth(&k63, &lim).unwrap();
    ensure(wl == 6 && tw + 1 == 4, || format!("K_6,3: wl {wl}, tw+1 {}", tw + 1))?;
    let mut graphs = 0;
    let mut sets = 0;
    for inst in corpus.iter().filter(|i| i.g.n() <= lim.well_linked) {
        let (wl, _) = ok(well_linked_number(&inst.g, &lim), || inst.name.clone())?;
        let (link, _) = ok(linkedness(&inst.g, &lim), || inst.name.clone())?;
        ensure(inst.tw < wl && wl <= 3 * link, || format!("{}: tw {}, wl {wl}, link {link}", inst.name, inst.tw))?;
        graphs += 1;
        if inst.g.n() <= 6 {
            for mask in 1u32..(1 << inst.g.n()) {
                let s: VertexSet = (0..inst.g.n()).filter(|&v| mask >> v & 1 == 1).collect();
                let int = is_well_linked(&inst.g, &s, false, &lim).unwrap().is_ok();
                let ext = is_well_linked(&inst.g, &s, true, &lim).unwrap().is_ok();
                ensure(int == ext, || format!("{}: S = {s} internal {int}, external {ext}", inst.name))?;
                sets += 1;
            }
        }
    }
    Ok(format!("chain on {graphs} graphs, {sets} sets agree internally/externally"))
}

/// AC8: product models validate; tw(T[K_2]) = 3; cart-product widths.
fn tree_products(corpus: &[Instance]) -> Outcome {
    let lim = limits();
    for inst in corpus {
        let (_, _, m) = ok(model_in_lex_product(&inst.g, &inst.td), || inst.name.clone())?;
        ok(validate_model(&m), || inst.name.clone())?.map_err(|d| format!("{} lex: {d}", inst.name))?;
        let (_, k, m) = ok(model_in_cart_product(&inst.g, &lim), || inst.name.clone())?;
        ensure(k == inst.tw + 1, || format!("{}: cart k = {k}", inst.name))?;
        ok(validate_model(&m), || inst.name.clone())?.map_err(|d| format!("{} cart: {d}", inst.name))?;
    }
    for seed in 0..20u64 {
        let n = 2 + (seed % 7) as usize;
        let t = TreeGraph::new(families::random_tree(n, seed).unwrap()).unwrap();
        let g = lex_product(&t, 2).unwrap();
        let (tw, _) = ok(exact_treewidth(&g, &lim), || format!("T[K_2] seed {seed}"))?;
        ensure(tw == 3, || format!("tw(T[K_2]) = {tw} for seed {seed}"))?;
        for k in 1..=4 {
            let host = cart_product_tree(&t, k).unwrap();
            let w = ok(validate_td(&host, &td_of_cart_product(&t, k).unwrap()), || format!("T^({k})"))?;
            ensure(w <= k, || format!("td_of_cart_product width {w} > k = {k}"))?;
        }
    }
    Ok(format!("{} graphs x 2 models, 20 trees", corpus.len()))
}

/// AC9: tangles from grid brambles; branchwidth against tangle order.
fn tangles() -> Outcome {
    let lim = limits();
    let mut notes = Vec::new();
    for k in [3, 4] {
        let (g, b) = grid_bramble(k).unwrap();
        let t = ok(tangle_from_bramble(&g, &b, k + 1, &lim), || format!("grid {k}"))?;
        ok(validate_tangle(&g, &t), || format!("grid {k}"))?.map_err(|d| format!("grid {k}: {d}"))?;
        let order = bramble_order(&g, &t.as_bramble()).unwrap().order;
        ensure(2 * order > k, || format!("grid {k}: tangle order {order}"))?;
        notes.push(format!("grid{k} tn>={order}"));
    }
    let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    for (name, g) in [("K4", Graph::complete(4).unwrap()), ("C4", c4)] {
        let b = hadwiger_number(&g, &lim).unwrap().1.to_bramble();
        let bn = bramble_order(&g, &b).unwrap().order;
        let t = ok(tangle_from_bramble(&g, &b, bn, &lim), || name.to_string())?;
        ok(validate_tangle(&g, &t), || name.to_string())?.map_err(|d| format!("{name}: {d}"))?;
        let tn = bramble_order(&g, &t.as_bramble()).unwrap().order;
        let (bw, _) = exact_branchwidth(&g, &lim).unwrap();
        ensure(tn <= bw && bw <= 2 * tn, || format!("{name}: tangle order {tn}, bw {bw}"))?;
        notes.push(format!("{name} tn={tn} bw={bw}"));
    }
    Ok(notes.join(", "))
}

/// AC10: the product-minor chain with exact rational weights.
fn minor_chain(corpus: &[Instance]) -> Outcome {
    let lim = limits();
    for k in 2..=4 {
        let (g, cert) = glm_from_grid(k).unwrap();
        let t = ok(validate_glm(&g, &cert), || format!("glm {k}"))?;
        let m = ok(model_in_product_from_glm(&g, &cert), || format!("glm {k}"))?;
        ok(validate_model(&m), || format!("glm {k}"))?.map_err(|d| format!("glm {k}: {d}"))?;
        check_weighted(&g, &m, t, &format!("grid {k}"))?;
    }
    for n in 1..=4 {
        let (v, _) = ok(had_f_small(&Graph::complete(n).unwrap(), None, &lim), || format!("K_{n}"))?;
        ensure(v == integer(n), || format!("had_f(K_{n}) = {v}"))?;
    }
    let mut checked = 0;
    for inst in corpus.iter().filter(|i| i.g.n() <= 6) {
        let (g, name) = (&inst.g, &inst.name);
        let (had_f, _) = ok(had_f_small(g, None, &lim), || name.clone())?;
        ensure(had_f <= integer(inst.tw + 1), || format!("{name}: had_f {had_f} > tw+1"))?;
        let (t, m) = ok(hadwiger_number(&cartesian_with_k2(g), &lim), || name.clone())?;
        for r in [2, 3] {
            let (had_r, _) = ok(had_f_small(g, Some(r), &lim), || name.clone())?;
            let wb = check_weighted(g, &m, t, name)?;
            ensure(wb.total() <= had_r && had_r <= had_f, || format!("{name}: r={r} chain broken"))?;
        }
        checked += 1;
    }
    Ok(format!("glm k=2..4, {checked} graphs with n <= 6"))
}

fn check_weighted(g: &Graph, m: &twtie_core::Model, t: usize, name: &str) -> Result<twtie_core::WeightedBramble, String> {
    let mut last = None;
    for r in [2, 3] {
        let wb = ok(weighted_bramble_from_product_model(g, m, r), || name.to_string())?;
        ok(validate_weighted_bramble(g, &wb, Some(r)), || name.to_string())?.map_err(|d| format!("{name}: {d}"))?;
        let total = wb.total();
        ensure(total.clone() * integer(3) >= integer(t), || format!("{name}: total {total} < t/3"))?;
        if r == 2 {
            ensure(total == ratio(t as i64, 2), || format!("{name}: total {total} != t/2"))?;
        }
        last = Some(wb);
    }
    Ok(last.unwrap())
}

/// AC11: byte-stable I/O, certificates re-verify, CLI exit codes.
fn io_contract(corpus: &[Instance]) -> Outcome {
    for inst in corpus.iter().take(100) {
        let gr = emit_gr(&inst.g);
        let g2 = ok(parse_gr(&gr), || inst.name.clone())?;
        ensure(emit_gr(&g2) == gr && g2 == inst.g, || format!("{}: .gr round trip", inst.name))?;
        let td = emit_td(&inst.td, inst.g.n());
        let back = ok(parse_td(&td), || inst.name.clone())?;
        ensure(emit_td(&back, inst.g.n()) == td, || format!("{}: .td round trip", inst.name))?;
        ok(validate_td(&g2, &back), || inst.name.clone())?;
    }
    let lim = Budget { hadwiger: 8, ..limits() };
    let mut certs = 0;
    for inst in corpus.iter().filter(|i| i.g.n() <= 6).take(40) {
        let rep = parameter_report(&inst.name, &inst.g, &lim);
        ensure(rep.all_hold(), || format!("{}: report verdict violated", inst.name))?;
        for (label, cert) in &rep.witnesses {
            let json = cert.to_json();
            let back = ok(Certificate::from_json(&json), || format!("{} {label}", inst.name))?;
            let host = match &back {
                Certificate::Model(m) => m.host.clone(),
                _ => inst.g.clone(),
            };
            ok(verify(&back, &host), || format!("{} {label}", inst.name))?;
            certs += 1;
        }
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let scenarios = common::exit_code_scenarios(dir.path());
    for (name, want, got) in &scenarios {
        ensure(want == got, || format!("CLI {name}: exit {got}, expected {want}"))?;
    }
    Ok(format!("100 round trips, {certs} certificates, {} CLI scenarios", scenarios.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus();
    println!("corpus: {} graphs built in {:.1}s", corpus.len(), start.elapsed().as_secs_f64());
    let c = &corpus;
    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("AC1 duality instances", 60, Box::new(|| duality(c))),
        ("AC2 normalisation", 10, Box::new(|| normalisation(c))),
        ("AC3 branchwidth sandwich", 120, Box::new(|| branchwidth(c))),
        ("AC4 separator chain", 300, Box::new(|| separators(c))),
        ("AC5 psi tightness", 120, Box::new(psi_tightness)),
        ("AC6 linkedness", 300, Box::new(|| linkage(c))),
        ("AC7 well-linked", 600, Box::new(|| well_linked(c))),
        ("AC8 tree products", 120, Box::new(|| tree_products(c))),
        ("AC9 tangles", 120, Box::new(tangles)),
        ("AC10 minor chain", 600, Box::new(|| minor_chain(c))),
        ("AC11 io and cli", 30, Box::new(|| io_contract(c))),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let t = Instant::now();
        let result = run();
        let el = t.elapsed();
        let (state, detail) = match result {
            Ok(d) if el <= Duration::from_secs(limit) => ("PASS", d),
            Ok(d) => ("FAIL", format!("over time limit: {d}")),
            Err(e) => ("FAIL", e),
        };
        if state == "FAIL" {
            failed += 1;
        }
        println!("{state} {name} ({:.2}s / {limit}s): {detail}", el.as_secs_f64());
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
