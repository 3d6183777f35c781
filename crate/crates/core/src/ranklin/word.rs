use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, MAX_DEGREE};

use super::matrix::BitMatrix;

/// A vector of `n` elements of GF(2^m).
///
/// Its rank weight is the GF(2)-rank of the `m x n` unfolding in which
/// column `i` holds the coefficients of coordinate `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    m: usize,
    elems: Vec<FieldElement>,
}

impl Word {
    pub fn new(m: usize, elems: Vec<FieldElement>) -> Result<Self> {
        if let Some(bad) = elems.iter().find(|e| e.degree() != m) {
            return Err(Error::DegreeMismatch {
                expected: m,
                got: bad.degree(),
            });
        }
        Ok(Word { m, elems })
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        Word {
            m: field.degree(),
            elems: vec![field.zero(); n],
        }
    }

    pub(crate) fn from_elems_unchecked(m: usize, elems: Vec<FieldElement>) -> Self {
        debug_assert!(elems.iter().all(|e| e.degree() == m));
        Word { m, elems }
    }

    /// Extension degree `m` of the coordinates.
    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[FieldElement] {
        &self.elems
    }

    pub fn is_zero(&self) -> bool {
        self.elems.iter().all(|e| e.is_zero())
    }

    pub fn to_matrix(&self) -> BitMatrix {
        BitMatrix::from_fn(self.m, self.elems.len(), |r, c| self.elems[c].coeff(r))
    }

    /// Inverse of [`Word::to_matrix`]: column `i` becomes coordinate `i`.
    pub fn from_matrix(field: &Field, m: &BitMatrix) -> Result<Self> {
        if m.rows() != field.degree() {
            return Err(Error::DegreeMismatch {
                expected: field.degree(),
                got: m.rows(),
            });
        }
        let elems = (0..m.cols())
            .map(|c| {
                let bits = (0..m.rows()).fold(0u128, |acc, r| acc | ((m.get(r, c) as u128) << r));
                field.wrap(bits)
            })
            .collect();
        Ok(Word {
            m: field.degree(),
            elems,
        })
    }

    pub fn rank_weight(&self) -> usize {
        // Columns are already packed; eliminate on them directly.
        debug_assert!(self.m <= MAX_DEGREE);
        let mut cols: Vec<u128> = self
            .elems
            .iter()
            .map(|e| e.bits())
            .filter(|&b| b != 0)
            .collect();
        let mut rank = 0;
        while let Some(pivot) = cols.iter().copied().max() {
            if pivot == 0 {
                break;
            }
            let top = 1u128 << (127 - pivot.leading_zeros());
            for c in cols.iter_mut() {
                if *c & top != 0 {
                    *c ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl std::ops::Add for &Word {
    type Output = Word;

    /// Coordinate-wise sum.
    ///
    /// # Panics
    ///
    /// Panics on length or degree mismatch.
    fn add(self, rhs: &Word) -> Word {
        assert_eq!(self.len(), rhs.len(), "word length mismatch");
        Word {
            m: self.m,
            elems: self
                .elems
                .iter()
                .zip(&rhs.elems)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

pub fn word_to_matrix(y: &Word) -> BitMatrix {
    y.to_matrix()
}

pub fn matrix_to_word(field: &Field, m: &BitMatrix) -> Result<Word> {
    Word::from_matrix(field, m)
}

/// Rank of the unfolded word over GF(2).
pub fn rank_weight(y: &Word) -> usize {
    y.rank_weight()
}
