//! Runs the parameter report over the standard corpus and prints violations.

use std::time::Instant;

use twtie_core::families::{generate, standard_corpus};
use twtie_core::report::parameter_report;
use twtie_core::Budget;

fn main() {
    let limits = Budget::from_env().unwrap_or_default();
    let start = Instant::now();
    let mut bad = 0;
    for spec in standard_corpus() {
        let g = generate(&spec).expect("corpus spec");
        let t = Instant::now();
        let rep = parameter_report(&spec.to_string(), &g, &limits);
        for v in rep.violations() {
            bad += 1;
            println!("{spec}: {} ({} > {})", v.name, v.lhs, v.rhs);
        }
        let el = t.elapsed().as_secs_f64();
        if el > 0.5 {
            println!("{spec}: {el:.2}s");
        }
    }
    println!("{bad} violations in {:.1}s", start.elapsed().as_secs_f64());
}
