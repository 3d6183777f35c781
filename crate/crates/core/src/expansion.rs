//! Expansion of `w(2n - w)` bits into a regular word of rank at most `w`.
//!
//! The input is cut into two matrices over GF(2):
//!
//! * `A` (`n x w`) from the first `w n` bits, filled column-major, so each
//!   column of `A` is one contiguous `n`-bit field element;
//! * `C` (`w x (n - w)`) from the remaining `w (n - w)` bits, row-major.
//!
//! With `B = (I_w | C)` the output word is the unfolding of `M = A B`, so
//! coordinate `j` of the word is column `j` of `M`: column `j` of `A` for
//! `j < w`, and the sum of the columns of `A` selected by column `j - w` of
//! `C` otherwise.

use crate::bits::{read_u128, BitStr};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::params::ParamSet;
use crate::ranklin::Word;

/// Expands `input` (exactly `params.expand_input_bits()` bits) into a word.
pub fn expand(input: &BitStr, params: &ParamSet) -> Result<Word> {
    let field = Field::new(params.n())?;
    expand_in(&field, input, params)
}

pub(crate) fn expand_in(field: &Field, input: &BitStr, params: &ParamSet) -> Result<Word> {
    let (n, w) = (params.n(), params.w());
    if input.len() != params.expand_input_bits() {
        return Err(Error::LengthMismatch {
            what: "expansion input",
            expected: params.expand_input_bits(),
            got: input.len(),
        });
    }
    let a_cols: Vec<u128> = (0..w).map(|c| read_u128(input, c * n, n)).collect();
    let c_bits = &input[w * n..];
    let tail = n - w;

    let mut out: Vec<u128> = Vec::with_capacity(n);
    out.extend_from_slice(&a_cols);
    out.resize(n, 0);
    for (r, a_col) in a_cols.iter().enumerate() {
        for j in c_bits[r * tail..(r + 1) * tail].iter_ones() {
            out[w + j] ^= a_col;
        }
    }
    Ok(Word::from_elems_unchecked(
        n,
        out.into_iter().map(|b| field.wrap(b)).collect(),
    ))
}
