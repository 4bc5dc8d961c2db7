use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use idealtop::tables::SpaceTables;
use idealtop::{enumerate_topologies, Ideal, IdealSpace, SubsetMask};

fn spaces(n: usize) -> Vec<IdealSpace> {
    let carrier = SubsetMask::singleton(0);
    enumerate_topologies(n)
        .unwrap()
        .into_iter()
        .map(|t| IdealSpace::new(t, Ideal::from_carrier(n, carrier).unwrap()).unwrap())
        .collect()
}

fn local_function(c: &mut Criterion) {
    let mut group = c.benchmark_group("local_function");
    for n in [3, 4] {
        let all = spaces(n);
        group.bench_with_input(BenchmarkId::new("neighbourhoods", n), &all, |b, all| {
            b.iter(|| {
                for s in all {
                    for a in SubsetMask::all(n) {
                        black_box(s.local_raw(a));
                    }
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("definition", n), &all, |b, all| {
            b.iter(|| {
                for s in all {
                    for a in SubsetMask::all(n) {
                        black_box(s.local_function_by_definition(a).unwrap());
                    }
                }
            })
        });
    }
    group.finish();
}

fn derived_topologies(c: &mut Criterion) {
    let all = spaces(4);
    c.bench_function("star_topology/4", |b| {
        b.iter(|| all.iter().map(|s| s.star_topology().unwrap()).collect::<Vec<_>>())
    });
    c.bench_function("space_tables/4", |b| b.iter(|| all.iter().map(|s| SpaceTables::new(s).unwrap()).collect::<Vec<_>>()));
}

criterion_group!(benches, local_function, derived_topologies);
criterion_main!(benches);
