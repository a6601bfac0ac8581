use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use duplex::laws::{check_laws_in, Structure, Variety};
use duplex::permutation::enumerate_indecomposable_in;
use duplex::planar::enumerate_trees_in;
use duplex::series::{verify_identity_in, IdentityName};
use duplex::{Config, IndecKind, Strategy};

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn configs() -> impl Iterator<Item = (&'static str, Config)> {
    STRATEGIES
        .into_iter()
        .map(|(name, s)| (name, Config::default().with_strategy(s)))
}

fn permutations(c: &mut Criterion) {
    let mut group = c.benchmark_group("s2_indecomposables_degree_8");
    for (name, cfg) in configs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| enumerate_indecomposable_in(black_box(8), IndecKind::S2, cfg).unwrap())
        });
    }
    group.finish();
}

fn trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("planar_trees_10_leaves");
    for (name, cfg) in configs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| enumerate_trees_in(black_box(10), cfg).unwrap())
        });
    }
    group.finish();
}

fn law_audits(c: &mut Criterion) {
    let mut group = c.benchmark_group("law_audit");
    let cases = [
        ("cube_duplexes2_9", Structure::Cube, Variety::Duplexes2, 9),
        ("binary_duplexes1_8", Structure::Binary, Variety::Duplexes1, 8),
        ("perm_duplex_7", Structure::Perm, Variety::Duplex, 7),
    ];
    for (case, structure, variety, bound) in cases {
        for (name, cfg) in configs() {
            group.bench_with_input(BenchmarkId::new(case, name), &cfg, |b, cfg| {
                b.iter(|| check_laws_in(structure, variety, black_box(bound), cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_cor52_order_8");
    for (name, cfg) in configs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| verify_identity_in(IdentityName::Cor52, black_box(8), cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default()
        .sample_size(10)
        .warm_up_time(Duration::from_millis(500))
        .measurement_time(Duration::from_secs(3));
    targets = permutations, trees, law_audits, identities
}
criterion_main!(benches);
