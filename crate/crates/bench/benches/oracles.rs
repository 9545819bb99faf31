use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use twtie_core::certificates::{bramble_order, grid_bramble};
use twtie_core::decomp::{exact_branchwidth, exact_treewidth};
use twtie_core::families::{generate, FamilySpec};
use twtie_core::rational::ratio;
use twtie_core::separators::sep_number;
use twtie_core::Budget;

fn budget() -> Budget {
    Budget { treewidth: 16, branchwidth: 12, separation: 16, ..Budget::default() }
}

fn treewidth(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_treewidth");
    for k in [3, 4] {
        let g = generate(&FamilySpec::Grid { rows: k, cols: k }).unwrap();
        group.bench_with_input(BenchmarkId::new("grid", k), &g, |b, g| b.iter(|| exact_treewidth(g, &budget()).unwrap()));
    }
    group.finish();
}

fn branchwidth(c: &mut Criterion) {
    let g = generate(&FamilySpec::Grid { rows: 2, cols: 4 }).unwrap();
    c.bench_function("exact_branchwidth/grid2x4", |b| b.iter(|| exact_branchwidth(&g, &budget()).unwrap()));
}

fn brambles(c: &mut Criterion) {
    let (g, br) = grid_bramble(4).unwrap();
    c.bench_function("bramble_order/grid4", |b| b.iter(|| bramble_order(&g, &br).unwrap()));
}

fn separation(c: &mut Criterion) {
    let g = generate(&FamilySpec::Grid { rows: 3, cols: 3 }).unwrap();
    let half = ratio(1, 2);
    c.bench_function("sep_number/grid3", |b| b.iter(|| sep_number(&g, &half, false, &budget()).unwrap()));
}

criterion_group!(benches, treewidth, branchwidth, brambles, separation);
criterion_main!(benches);
