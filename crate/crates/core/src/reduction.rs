//! Embedding of binary vectors into GF(2^m)^n: `x -> (alpha_1 x_1, ..., alpha_n x_n)`.
//!
//! When the `alpha_i` are linearly independent over GF(2) the rank weight of
//! the image equals the Hamming weight of `x`.

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::bits::BitStr;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::field::FieldElement;
use crate::ranklin::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Embedding {
    field: Field,
    alpha: Vec<FieldElement>,
    independent: bool,
}

impl Embedding {
    /// Wraps `alpha`, computing whether its coordinates are independent.
    pub fn new(field: Field, alpha: Vec<FieldElement>) -> Result<Self> {
        let (m, n) = (field.degree(), alpha.len());
        if m < n {
            return Err(Error::EmbeddingTooWide { m, n });
        }
        let word = Word::new(m, alpha)?;
        let independent = word.rank_weight() == n;
        Ok(Embedding {
            field,
            alpha: word.elems().to_vec(),
            independent,
        })
    }

    pub fn alpha(&self) -> &[FieldElement] {
        &self.alpha
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn is_independent(&self) -> bool {
        self.independent
    }
}

/// An independent embedding and the number of draws it took.
#[derive(Clone, Debug)]
pub struct IndependentSample {
    pub embedding: Embedding,
    pub draws: usize,
}

/// Draws uniform `alpha` in GF(2^m)^n until its coordinates are independent.
pub fn sample_independent_alpha(m: usize, n: usize, rng_seed: u64) -> Result<IndependentSample> {
    if m < n {
        return Err(Error::EmbeddingTooWide { m, n });
    }
    let field = Field::new(m)?;
    let mut rng = StdRng::seed_from_u64(rng_seed);
    let mut draws = 0;
    loop {
        draws += 1;
        let alpha = (0..n).map(|_| field.random(&mut rng)).collect();
        let embedding = Embedding::new(field, alpha)?;
        if embedding.is_independent() {
            return Ok(IndependentSample { embedding, draws });
        }
    }
}

pub fn psi_alpha(x: &BitStr, e: &Embedding) -> Result<Word> {
    if x.len() != e.len() {
        return Err(Error::LengthMismatch {
            what: "embedded vector",
            expected: e.len(),
            got: x.len(),
        });
    }
    let zero = e.field.zero();
    let elems = x
        .iter()
        .zip(&e.alpha)
        .map(|(bit, &a)| if *bit { a } else { zero })
        .collect();
    Word::new(e.field.degree(), elems)
}
