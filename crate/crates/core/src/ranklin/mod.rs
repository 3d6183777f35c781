//! GF(2) linear algebra and rank-metric primitives.

mod counting;
mod matrix;
mod word;

pub use counting::{
    gaussian_binomial, gv_distance_approx, gv_distance_exact, log2_big, rank_ball_size,
};
pub use matrix::{rank_f2, BitMatrix};
pub use word::{matrix_to_word, rank_weight, word_to_matrix, Word};
