//! The iterated syndrome generator.
//!
//! Each iteration computes `s = H y^T`, serializes `s` (elements in index
//! order, `n` bits each, coefficient order), feeds the first
//! `w(2n - w)` bits back through [`expand`](crate::expansion::expand) to get
//! the next `y`, and emits the rest.
//!
//! The all-zero word is a fixed point: `y = 0` gives `s = 0` forever. More
//! generally, when the last `w(n - w)` expansion input bits (the `C` block)
//! are zero, `y` lives in the first `w <= n - k` coordinates, the identity
//! part of `H` copies it into the syndrome unchanged, and the generator
//! emits zeros forever. For every preset those bits lie inside the IV, so a
//! zero IV is degenerate whatever the seed. A zero `A` block (the first `wn`
//! bits) gives `y = 0` directly. This layer accepts such inputs; front ends
//! should reject them with [`is_degenerate_input`]. That check only covers
//! the block-zero cases: other sparse inputs whose `y` stays in the first
//! `n - k` coordinates behave the same way, so seed and IV should be
//! uniformly random.

use crate::bits::{push_u128, to_bytes, BitStr, Bits};
use crate::error::{Error, Result};
use crate::expansion::expand_in;
use crate::field::FieldElement;
use crate::key::SystematicParityCheck;
use crate::params::ParamSet;
use crate::ranklin::Word;

/// `H y^T` for `H = (I | A)`: `s_i = y_i + sum_j A[i][j] y_{n-k+j}`.
///
/// Products are accumulated unreduced and reduced once per coordinate.
pub fn syndrome(h: &SystematicParityCheck, y: &Word) -> Result<Vec<FieldElement>> {
    let p = h.params();
    let (n, k, r) = (p.n(), p.k(), p.redundancy());
    if y.len() != n {
        return Err(Error::LengthMismatch {
            what: "word",
            expected: n,
            got: y.len(),
        });
    }
    if y.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            got: y.degree(),
        });
    }
    let field = h.field();
    let (head, tail) = y.elems().split_at(r);
    let tail: Vec<u128> = tail.iter().map(|e| e.bits()).collect();
    let s = h
        .a_part()
        .chunks_exact(k)
        .zip(head)
        .map(|(row, &y_i)| {
            let (mut lo, mut hi) = (0u128, 0u128);
            for (a, &yj) in row.iter().zip(&tail) {
                if yj != 0 {
                    let (plo, phi) = crate::field::clmul128(a.bits(), yj);
                    lo ^= plo;
                    hi ^= phi;
                }
            }
            field.wrap(field.reduce(lo, hi) ^ y_i.bits())
        })
        .collect();
    Ok(s)
}

/// Serializes a syndrome and splits it into the feedback part `s1`
/// (`w(2n - w)` bits) and the output part `s2`.
pub fn split_syndrome(s: &[FieldElement], params: &ParamSet) -> Result<(Bits, Bits)> {
    let n = params.n();
    if s.len() != params.redundancy() {
        return Err(Error::LengthMismatch {
            what: "syndrome",
            expected: params.redundancy(),
            got: s.len(),
        });
    }
    let mut all = Bits::with_capacity(params.syndrome_bits());
    for e in s {
        push_u128(&mut all, e.bits(), n);
    }
    let s2 = all.split_off(params.expand_input_bits());
    Ok((all, s2))
}

/// True when `seed || iv` has a zero `A` or `C` block, either of which makes
/// the output stream all zeros (see the module docs).
///
/// Lengths are assumed to match `params`; other inputs return `false`.
pub fn is_degenerate_input(seed: &BitStr, iv: &BitStr, params: &ParamSet) -> bool {
    if seed.len() + iv.len() != params.expand_input_bits() || params.w() > params.redundancy() {
        return false;
    }
    let c_start = params.w() * params.n();
    let mut input = seed.to_bitvec();
    input.extend_from_bitslice(iv);
    input[..c_start].not_any() || input[c_start..].not_any()
}

/// Generator state: the public matrix, the current secret word, and any
/// output bits not yet handed out.
#[derive(Clone, Debug)]
pub struct GeneratorState {
    h: SystematicParityCheck,
    y: Word,
    pending: Bits,
}

/// Starts a generator from a `lambda`-bit seed and an `iv_bits`-bit IV.
pub fn prng_init(seed: &BitStr, iv: &BitStr, h: SystematicParityCheck) -> Result<GeneratorState> {
    let p = *h.params();
    if seed.len() != p.seed_bits() {
        return Err(Error::LengthMismatch {
            what: "seed",
            expected: p.seed_bits(),
            got: seed.len(),
        });
    }
    if iv.len() != p.iv_bits() {
        return Err(Error::LengthMismatch {
            what: "iv",
            expected: p.iv_bits(),
            got: iv.len(),
        });
    }
    let mut input = seed.to_bitvec();
    input.extend_from_bitslice(iv);
    let y = expand_in(h.field(), &input, &p)?;
    Ok(GeneratorState {
        h,
        y,
        pending: Bits::new(),
    })
}

impl GeneratorState {
    pub fn params(&self) -> &ParamSet {
        self.h.params()
    }

    pub fn parity_check(&self) -> &SystematicParityCheck {
        &self.h
    }

    /// The current secret word.
    pub fn word(&self) -> &Word {
        &self.y
    }

    /// One iteration; returns the `block_out_bits` output bits.
    pub fn next_block(&mut self) -> Bits {
        let p = *self.h.params();
        let s = syndrome(&self.h, &self.y).expect("state word matches its matrix");
        let (s1, s2) = split_syndrome(&s, &p).expect("syndrome length matches params");
        self.y = expand_in(self.h.field(), &s1, &p).expect("feedback length matches params");
        s2
    }

    /// The next `nbytes` bytes of the output stream.
    ///
    /// Blocks are concatenated into one LSB-first bit stream; bits left over
    /// after the last whole byte are kept for the next call.
    pub fn generate(&mut self, nbytes: usize) -> Vec<u8> {
        let want = nbytes * 8;
        while self.pending.len() < want {
            let block = self.next_block();
            self.pending.extend_from_bitslice(&block);
        }
        let rest = self.pending.split_off(want);
        let out = to_bytes(&self.pending);
        self.pending = rest;
        out
    }

    /// Fills `buf` from the output stream.
    pub fn fill_bytes(&mut self, buf: &mut [u8]) {
        let bytes = self.generate(buf.len());
        buf.copy_from_slice(&bytes);
    }
}
