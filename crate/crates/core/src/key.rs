//! Systematic parity-check matrices: generation and the key file format.
//!
//! Key file layout (all integers little-endian):
//!
//! ```text
//! "RQP1" | n: u32 | k: u32 | w: u32 | lambda: u32 | a_part bits
//! ```
//!
//! `a_part` is written row-major, each element as `n` bits in coefficient
//! order, LSB-first within bytes, zero-padded to a byte boundary at the end.

use crate::bits::{self, push_u128, read_u128, Bits};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::params::ParamSet;

pub const KEY_MAGIC: &[u8; 4] = b"RQP1";
const HEADER_LEN: usize = 4 + 4 * 4;

/// The splitmix64 generator, used to derive reproducible test matrices.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// The first `len` bits of the output stream, each output LSB-first.
    pub fn bits(&mut self, len: usize) -> Bits {
        let mut out = Bits::with_capacity(len);
        while out.len() < len {
            let take = (len - out.len()).min(64);
            push_u128(&mut out, self.next_u64() as u128, take);
        }
        out
    }
}

/// Where key generation draws its randomness from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeySource {
    /// Reproducible: splitmix64 seeded with the given value.
    Seed64(u64),
    /// The operating system's entropy source.
    Os,
}

/// `H = (I_{n-k} | A)`, stored as the `(n-k) x k` block `A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystematicParityCheck {
    params: ParamSet,
    field: Field,
    a_part: Vec<FieldElement>,
}

impl SystematicParityCheck {
    /// Builds the matrix from `k(n-k)n` bits in key-file order.
    pub fn from_bits(params: ParamSet, bits: &bits::BitStr) -> Result<Self> {
        let n = params.n();
        if bits.len() != params.key_bits() {
            return Err(Error::LengthMismatch {
                what: "parity-check matrix",
                expected: params.key_bits(),
                got: bits.len(),
            });
        }
        let field = Field::new(n)?;
        let count = params.k() * params.redundancy();
        let a_part = (0..count)
            .map(|e| field.wrap(read_u128(bits, e * n, n)))
            .collect();
        Ok(SystematicParityCheck {
            params,
            field,
            a_part,
        })
    }

    pub fn from_elements(params: ParamSet, a_part: Vec<FieldElement>) -> Result<Self> {
        let expected = params.k() * params.redundancy();
        if a_part.len() != expected {
            return Err(Error::LengthMismatch {
                what: "parity-check coefficients",
                expected,
                got: a_part.len(),
            });
        }
        if let Some(e) = a_part.iter().find(|e| e.degree() != params.n()) {
            return Err(Error::DegreeMismatch {
                expected: params.n(),
                got: e.degree(),
            });
        }
        Ok(SystematicParityCheck {
            params,
            field: Field::new(params.n())?,
            a_part,
        })
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Row-major `(n-k) x k` coefficients.
    pub fn a_part(&self) -> &[FieldElement] {
        &self.a_part
    }

    /// Coefficient `(row, col)` of the non-identity block.
    pub fn coeff(&self, row: usize, col: usize) -> FieldElement {
        self.a_part[row * self.params.k() + col]
    }

    /// Entry `(row, col)` of the full `(n-k) x n` matrix `(I | A)`.
    pub fn entry(&self, row: usize, col: usize) -> FieldElement {
        let r = self.params.redundancy();
        if col < r {
            if row == col {
                self.field.one()
            } else {
                self.field.zero()
            }
        } else {
            self.coeff(row, col - r)
        }
    }

    pub fn to_bits(&self) -> Bits {
        let n = self.params.n();
        let mut out = Bits::with_capacity(self.params.key_bits());
        for e in &self.a_part {
            push_u128(&mut out, e.bits(), n);
        }
        out
    }

    pub fn to_key_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.params.key_bits().div_ceil(8));
        out.extend_from_slice(KEY_MAGIC);
        for v in [
            self.params.n(),
            self.params.k(),
            self.params.w(),
            self.params.lambda(),
        ] {
            out.extend_from_slice(&(v as u32).to_le_bytes());
        }
        out.extend_from_slice(&bits::to_bytes(&self.to_bits()));
        out
    }

    pub fn from_key_bytes(bytes: &[u8]) -> Result<Self> {
        let bad = |msg: &str| Error::KeyFormat(msg.to_string());
        if bytes.len() < HEADER_LEN {
            return Err(bad("truncated header"));
        }
        if &bytes[..4] != KEY_MAGIC {
            return Err(bad("bad magic"));
        }
        let field = |i: usize| {
            let off = 4 + 4 * i;
            u32::from_le_bytes(bytes[off..off + 4].try_into().expect("4 bytes")) as usize
        };
        let params = ParamSet::new(field(0), field(1), field(2), field(3))
            .map_err(|e| Error::KeyFormat(e.to_string()))?;
        let body = &bytes[HEADER_LEN..];
        let expected = params.key_bits().div_ceil(8);
        if body.len() != expected {
            return Err(Error::KeyFormat(format!(
                "body is {} bytes, expected {expected}",
                body.len()
            )));
        }
        let bits =
            bits::from_bytes(body, params.key_bits()).ok_or_else(|| bad("nonzero padding bits"))?;
        Self::from_bits(params, &bits)
    }
}

/// Draws a random systematic parity-check matrix for `params`.
pub fn keygen(source: KeySource, params: ParamSet) -> Result<SystematicParityCheck> {
    let len = params.key_bits();
    let bits = match source {
        KeySource::Seed64(seed) => SplitMix64::new(seed).bits(len),
        KeySource::Os => {
            let mut buf = vec![0u8; len.div_ceil(8)];
            getrandom::fill(&mut buf).map_err(|e| Error::Entropy(e.to_string()))?;
            let mut bits = Bits::from_vec(buf);
            bits.truncate(len);
            bits
        }
    };
    SystematicParityCheck::from_bits(params, &bits)
}
