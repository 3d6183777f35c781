//! Wall-clock throughput of the generator.

use std::fmt;
use std::hint::black_box;
use std::time::{Duration, Instant};

use rsdprng::bits::Bits;
use rsdprng::key::{keygen, KeySource, SplitMix64};
use rsdprng::params::{presets, Family, Preset};
use rsdprng::prng::{prng_init, GeneratorState};

/// Lengths used for the per-bit scaling check.
pub const SCALING_LENGTHS: [usize; 4] = [31, 43, 61, 83];

const CHUNK_BYTES: usize = 4096;

#[derive(Debug, Clone)]
pub struct Throughput {
    pub label: &'static str,
    pub n: usize,
    pub block_out_bits: usize,
    pub bytes: usize,
    pub elapsed: Duration,
}

impl Throughput {
    pub fn bytes_per_sec(&self) -> f64 {
        self.bytes as f64 / self.elapsed.as_secs_f64()
    }

    pub fn ns_per_byte(&self) -> f64 {
        self.elapsed.as_nanos() as f64 / self.bytes as f64
    }

    pub fn ns_per_bit(&self) -> f64 {
        self.ns_per_byte() / 8.0
    }
}

impl fmt::Display for Throughput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<12} n={:<4} block={:<6} bits  {:>10.2} MiB/s  {:>9.2} ns/byte",
            self.label,
            self.n,
            self.block_out_bits,
            self.bytes_per_sec() / (1024.0 * 1024.0),
            self.ns_per_byte()
        )
    }
}

/// A generator with a fixed key, seed and IV for measurement.
pub fn bench_state(preset: &Preset) -> GeneratorState {
    let p = preset.params;
    let h = keygen(KeySource::Seed64(0x5EED), p).expect("preset parameters are valid");
    let mut sm = SplitMix64::new(0xB0B);
    let seed: Bits = sm.bits(p.seed_bits());
    let iv: Bits = sm.bits(p.iv_bits());
    prng_init(&seed, &iv, h).expect("lengths come from the parameter set")
}

/// Generates in 4 KiB chunks until `budget` has elapsed (at least one chunk).
pub fn measure(preset: &Preset, budget: Duration) -> Throughput {
    let mut st = bench_state(preset);
    // warm-up
    black_box(st.generate(CHUNK_BYTES));
    let start = Instant::now();
    let mut bytes = 0;
    loop {
        black_box(st.generate(CHUNK_BYTES));
        bytes += CHUNK_BYTES;
        if start.elapsed() >= budget {
            break;
        }
    }
    Throughput {
        label: preset.label,
        n: preset.params.n(),
        block_out_bits: preset.params.block_out_bits(),
        bytes,
        elapsed: start.elapsed(),
    }
}

/// The preset used for length `n` in the scaling check: the fast-family set
/// when one exists, otherwise the compact one.
pub fn scaling_preset(n: usize) -> Option<Preset> {
    let candidates: Vec<_> = presets()
        .into_iter()
        .filter(|p| p.params.n() == n)
        .collect();
    candidates
        .iter()
        .find(|p| p.family == Family::Fast)
        .or_else(|| candidates.first())
        .copied()
}

pub fn scaling(budget_each: Duration) -> Vec<Throughput> {
    SCALING_LENGTHS
        .iter()
        .filter_map(|&n| scaling_preset(n))
        .map(|p| measure(&p, budget_each))
        .collect()
}

/// Largest `cost(n) / cost(n0)` divided by `n / n0` over the scaling rows,
/// where `n0` is the smallest length. Linear growth gives at most 1.
pub fn worst_linear_ratio(rows: &[Throughput]) -> f64 {
    let Some(base) = rows.iter().min_by_key(|t| t.n) else {
        return 0.0;
    };
    rows.iter()
        .map(|t| (t.ns_per_bit() / base.ns_per_bit()) / (t.n as f64 / base.n as f64))
        .fold(0.0, f64::max)
}
