use criterion::{black_box, criterion_group, criterion_main, Criterion};
use ffd_core::parse::parse_ratfun;
use ffd_core::verify::generators::{instance_rng, poly_of_degree};
use ffd_core::verify::{run_batch, BatchConfig, BatchKind};
use ffd_core::{factor, squarefree_decomposition, RatFun, UniPoly};

fn polys(count: usize, deg: usize) -> Vec<UniPoly> {
    (0..count).map(|i| poly_of_degree(&mut instance_rng(1, i as u64), deg)).collect()
}

fn bench_factor(c: &mut Criterion) {
    let ps = polys(16, 12);
    c.bench_function("factor degree 12", |b| {
        b.iter(|| {
            for p in &ps {
                black_box(factor(p));
            }
        })
    });
    let cyclo = parse_ratfun("t^24 - 1").unwrap();
    c.bench_function("factor t^24 - 1", |b| b.iter(|| black_box(factor(cyclo.num()))));
}

fn bench_squarefree(c: &mut Criterion) {
    let ps: Vec<UniPoly> = polys(16, 10).iter().map(|p| &p.pow(2) * p).collect();
    c.bench_function("squarefree degree 30", |b| {
        b.iter(|| {
            for p in &ps {
                black_box(squarefree_decomposition(p));
            }
        })
    });
}

fn bench_subsums(c: &mut Criterion) {
    let vals: Vec<RatFun> = polys(16, 4).into_iter().map(RatFun::from_poly).collect();
    c.bench_function("vanishing subsets of 16 terms", |b| {
        b.iter(|| black_box(ffd_core::mpoly::vanishing_subsets(&vals).unwrap()))
    });
}

fn bench_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("batch");
    group.sample_size(10);
    group.bench_function("brownawell-masser x50", |b| {
        b.iter(|| black_box(run_batch(&BatchConfig::new(BatchKind::Bm, 7, 50)).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, bench_factor, bench_squarefree, bench_subsums, bench_batch);
criterion_main!(benches);
