use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rsdprng::bits::Bits;
use rsdprng::expansion::expand;
use rsdprng::field::Field;
use rsdprng::params::presets;
use rsdprng::prng::syndrome;
use rsdprng_bench::fixed_state;

fn field_mul(c: &mut Criterion) {
    let mut g = c.benchmark_group("field_mul");
    let mut rng = StdRng::seed_from_u64(1);
    for n in [31, 43, 61, 83, 127] {
        let f = Field::new(n).unwrap();
        let (a, b) = (f.random(&mut rng), f.random(&mut rng));
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bch, _| {
            bch.iter(|| f.mul(black_box(a), black_box(b)))
        });
    }
    g.finish();
}

fn expansion(c: &mut Criterion) {
    let mut g = c.benchmark_group("expand");
    let mut rng = StdRng::seed_from_u64(2);
    for pr in presets() {
        let p = pr.params;
        let input: Bits = (0..p.expand_input_bits())
            .map(|_| rng.random::<bool>())
            .collect();
        g.bench_function(pr.label, |bch| {
            bch.iter(|| expand(black_box(&input), &p).unwrap())
        });
    }
    g.finish();
}

fn syndrome_product(c: &mut Criterion) {
    let mut g = c.benchmark_group("syndrome");
    for pr in presets() {
        let st = fixed_state(&pr);
        let (h, y) = (st.parity_check().clone(), st.word().clone());
        g.bench_function(pr.label, |bch| {
            bch.iter(|| syndrome(&h, black_box(&y)).unwrap())
        });
    }
    g.finish();
}

fn generate(c: &mut Criterion) {
    const BYTES: usize = 16 * 1024;
    let mut g = c.benchmark_group("generate");
    g.throughput(Throughput::Bytes(BYTES as u64));
    for pr in presets() {
        let mut st = fixed_state(&pr);
        g.bench_function(pr.label, |bch| bch.iter(|| st.generate(BYTES)));
    }
    g.finish();
}

criterion_group!(benches, field_mul, expansion, syndrome_product, generate);
criterion_main!(benches);
