use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cliquereconf_core::clique::{enumerate_k_cliques, maximal_cliques};
use cliquereconf_core::coloring::chromatic_number;
use cliquereconf_core::corpus::{generate_one, CorpusFamily};
use cliquereconf_core::iso::are_isomorphic;
use cliquereconf_core::reconf::{build_simplex, build_tj, build_ts};
use cliquereconf_core::reconstruct::reconstruct_ts;
use cliquereconf_core::Graph;

const SEED: u64 = 7;

fn gnp(n: usize, p: f64) -> Graph {
    generate_one(CorpusFamily::RandomGnp, n, SEED, 0, p)
}

fn cliques(c: &mut Criterion) {
    let mut group = c.benchmark_group("cliques");
    for n in [20, 40, 60] {
        let g = gnp(n, 0.5);
        group.bench_with_input(BenchmarkId::new("k4", n), &g, |b, g| b.iter(|| enumerate_k_cliques(g, 4).len()));
        group.bench_with_input(BenchmarkId::new("maximal", n), &g, |b, g| b.iter(|| maximal_cliques(g).len()));
    }
    group.finish();
}

fn builders(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    for n in [10, 14, 18] {
        let g = gnp(n, 0.6);
        group.bench_with_input(BenchmarkId::new("ts3", n), &g, |b, g| b.iter(|| build_ts(g, 3).unwrap()));
        group.bench_with_input(BenchmarkId::new("simplex", n), &g, |b, g| b.iter(|| build_simplex(g)));
    }
    group.finish();
}

fn reconstruction(c: &mut Criterion) {
    let mut group = c.benchmark_group("reconstruct");
    for n in [6, 8, 10] {
        // G ⊕ K_3 has clique number ω(G) + 3 and a large TJ_ω graph.
        let g = gnp(n, 0.5).join(&Graph::complete(3));
        let omega = cliquereconf_core::clique::clique_number(&g);
        let t = build_tj(&g, omega).unwrap().into_graph();
        group.bench_with_input(BenchmarkId::new("tj_omega", n), &t, |b, t| {
            b.iter(|| reconstruct_ts(t, omega).unwrap())
        });
    }
    group.finish();
}

fn isomorphism(c: &mut Criterion) {
    let g = build_ts(&Graph::complete(7), 3).unwrap().into_graph();
    let h = cliquereconf_core::families::johnson(7, 3).unwrap();
    c.bench_function("iso/ts3_k7_vs_j73", |b| b.iter(|| are_isomorphic(black_box(&g), black_box(&h))));
}

fn coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic");
    for n in [15, 25, 35] {
        let g = gnp(n, 0.5);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| chromatic_number(g)));
    }
    group.finish();
}

criterion_group!(benches, cliques, builders, reconstruction, isomorphism, coloring);
criterion_main!(benches);
