use criterion::{criterion_group, criterion_main, Criterion};

use ncsym::{verify_exhaustive_with, VerifyOptions};

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_exhaustive");
    group.sample_size(10);
    for n in [3, 4, 5] {
        group.bench_function(format!("n={n}"), |b| {
            b.iter(|| verify_exhaustive_with(n, &VerifyOptions::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, verify);
criterion_main!(benches);
