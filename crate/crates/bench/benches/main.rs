mod conjecture;

use criterion::{criterion_group, criterion_main};

criterion_group!(benches, integrals::bench, conjecture::bench);
criterion_main!(benches);
