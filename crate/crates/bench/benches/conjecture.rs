use criterion::{BenchmarkId, Criterion};
use supergroup::conjecture::{j0_truncated, jm_truncated, lr_sweep};
use supergroup_bench::{points, precision};

pub fn bench(c: &mut Criterion) {
    let prec = precision(256);
    let mut group = c.benchmark_group("series");
    for n in [4, 8] {
        let z = points(n, 2, &prec);
        group.bench_with_input(BenchmarkId::new("j0_k64", n), &z, |b, z| b.iter(|| j0_truncated(z, 64, &prec).unwrap()));
        group.bench_with_input(BenchmarkId::new("jm_half_k64", n), &z, |b, z| {
            b.iter(|| jm_truncated(z, n / 2, 64, &prec).unwrap())
        });
    }
    group.finish();

    c.bench_function("lr_sweep_2_2_6", |b| b.iter(|| lr_sweep(2, 2, 6).unwrap()));
}
