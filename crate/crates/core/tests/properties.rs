use proptest::prelude::*;

use rsdprng::bits::Bits;
use rsdprng::expand;
use rsdprng::key::{keygen, KeySource, SystematicParityCheck};
use rsdprng::params::presets;
use rsdprng::prng::prng_init;

fn preset_index() -> impl Strategy<Value = usize> {
    0..presets().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_rank_at_most_w(idx in preset_index(), seed: u64) {
        let p = presets()[idx].params;
        let mut sm = rsdprng::key::SplitMix64::new(seed);
        let y = expand(&sm.bits(p.expand_input_bits()), &p).unwrap();
        prop_assert_eq!(y.len(), p.n());
        prop_assert!(y.rank_weight() <= p.w());
    }

    #[test]
    fn key_file_round_trip(idx in preset_index(), seed: u64) {
        let h = keygen(KeySource::Seed64(seed), presets()[idx].params).unwrap();
        prop_assert_eq!(SystematicParityCheck::from_key_bytes(&h.to_key_bytes()).unwrap(), h);
    }

    #[test]
    fn stream_splits_anywhere(a in 0usize..400, b in 0usize..400, seed: u64) {
        let p = presets()[0].params;
        let h = keygen(KeySource::Seed64(seed), p).unwrap();
        let mut sm = rsdprng::key::SplitMix64::new(!seed);
        let st = prng_init(&sm.bits(p.seed_bits()), &sm.bits(p.iv_bits()), h).unwrap();
        let mut whole = st.clone();
        let all = whole.generate(a + b);
        let mut parts = st;
        let mut got = parts.generate(a);
        got.extend(parts.generate(b));
        prop_assert_eq!(got, all);
    }
}

#[test]
fn output_rate_identity() {
    for pr in presets() {
        let p = pr.params;
        assert_eq!(
            p.block_out_bits(),
            p.n() * (p.n() - p.k()) - p.w() * (2 * p.n() - p.w())
        );
        assert!(p.block_out_bits() > 0);
        assert_eq!(p.seed_bits() + p.iv_bits(), p.expand_input_bits());
    }
}

#[test]
fn different_keys_give_different_streams() {
    let p = presets()[4].params;
    let mut sm = rsdprng::key::SplitMix64::new(77);
    let seed: Bits = sm.bits(p.seed_bits());
    let iv: Bits = sm.bits(p.iv_bits());
    let a = prng_init(&seed, &iv, keygen(KeySource::Seed64(1), p).unwrap())
        .unwrap()
        .generate(64);
    let b = prng_init(&seed, &iv, keygen(KeySource::Seed64(2), p).unwrap())
        .unwrap()
        .generate(64);
    assert_ne!(a, b);
}
