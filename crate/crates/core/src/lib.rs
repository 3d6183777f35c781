//! Pseudo-random generation from rank-metric syndrome decoding.
//!
//! A secret word `y` of small rank weight over GF(2^n) is multiplied by a
//! public random systematic parity-check matrix `H`. Part of the syndrome
//! `H y^T` is emitted, the rest is expanded into the next secret word.
//!
//! ```
//! use rsdprng::{key::{keygen, KeySource}, params::preset, prng::prng_init, bits::Bits};
//!
//! let p = preset("fast-128").unwrap().params;
//! let h = keygen(KeySource::Seed64(1), p).unwrap();
//! let seed = Bits::repeat(true, p.seed_bits());
//! let iv = Bits::repeat(false, p.iv_bits());
//! let mut rng = prng_init(&seed, &iv, h).unwrap();
//! let bytes = rng.generate(32);
//! assert_eq!(bytes.len(), 32);
//! ```

pub mod attacks;
pub mod bits;
pub mod error;
pub mod expansion;
pub mod field;
pub mod key;
pub mod params;
pub mod prng;
pub mod ranklin;
pub mod reduction;

pub use attacks::{check_security, classical_cost, quantum_cost, AttackCost, SecurityReport};
pub use bits::{BitStr, Bits};
pub use error::{Error, Result};
pub use expansion::expand;
pub use field::{find_irreducible, Field, FieldElement, PolyBits};
pub use key::{keygen, KeySource, SystematicParityCheck};
pub use params::{preset, presets, Family, ParamSet, Preset};
pub use prng::{is_degenerate_input, prng_init, split_syndrome, syndrome, GeneratorState};
pub use ranklin::{BitMatrix, Word};
