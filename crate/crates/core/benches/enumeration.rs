use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cominuscule::exec::Exec;
use cominuscule::jdt::rectify;
use cominuscule::rootsys::{build_poset, CominusculePoset, Space};
use cominuscule::schubert::{build_table, Convention, Rule};
use cominuscule::shapes::{enumerate_syt, SkewShape};

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn skews(p: &CominusculePoset) -> Vec<SkewShape> {
    let ideals = p.ideals();
    ideals
        .iter()
        .flat_map(|&a| ideals.iter().filter(move |&&b| a.is_subset(b)).map(move |&b| SkewShape { inner: a, outer: b }))
        .filter(|s| s.len() <= 8)
        .collect()
}

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_table");
    group.sample_size(10);
    for space in
        [Space::Grassmannian { k: 3, n: 6 }, Space::Grassmannian { k: 3, n: 7 }, Space::LagrangianGrassmannian { n: 4 }]
    {
        let p = build_poset(space).unwrap();
        for (name, exec) in POLICIES {
            group.bench_with_input(BenchmarkId::new(name, space.name()), &exec, |b, &exec| {
                b.iter(|| build_table(&p, Rule::DualClass, Convention::Cominuscule, 16, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("rectify_sweep");
    group.sample_size(10);
    let p = build_poset(Space::CayleyPlane).unwrap();
    let shapes = skews(&p);
    for (name, exec) in POLICIES {
        group.bench_function(BenchmarkId::new(name, "OP2"), |b| {
            b.iter(|| exec.map(&shapes, |s| enumerate_syt(&p, *s).iter().map(|t| rectify(&p, t).len()).sum::<usize>()))
        });
    }
    group.finish();
}

criterion_group!(benches, tables, sweep);
criterion_main!(benches);
