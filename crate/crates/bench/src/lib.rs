//! Criterion benchmarks for the generator; see `benches/`.

use rsdprng::bits::Bits;
use rsdprng::key::{keygen, KeySource, SplitMix64};
use rsdprng::params::Preset;
use rsdprng::prng::{prng_init, GeneratorState};

/// A generator with a fixed key, seed and IV.
pub fn fixed_state(preset: &Preset) -> GeneratorState {
    let p = preset.params;
    let h = keygen(KeySource::Seed64(0x5EED), p).expect("preset parameters are valid");
    let mut sm = SplitMix64::new(0xB0B);
    let seed: Bits = sm.bits(p.seed_bits());
    let iv: Bits = sm.bits(p.iv_bits());
    prng_init(&seed, &iv, h).expect("lengths come from the parameter set")
}
