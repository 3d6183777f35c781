//! Subspace and rank-ball counting, and the rank Gilbert-Varshamov distance.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Number of `r`-dimensional subspaces of `F_q^m`. Zero when `r > m`.
pub fn gaussian_binomial(m: usize, r: usize, q: u32) -> BigUint {
    if r > m {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        num *= q.pow((m - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

/// Number of `m x n` matrices over `F_q` of rank at most `t`.
pub fn rank_ball_size(m: usize, n: usize, t: usize, q: u32) -> BigUint {
    let qb = BigUint::from(q);
    let qm = qb.pow(m as u32);
    let mut total = BigUint::zero();
    // Π_{j<i} (q^m - q^j), updated incrementally
    let mut falling = BigUint::one();
    for i in 0..=t.min(m).min(n) {
        if i > 0 {
            falling *= &qm - qb.pow((i - 1) as u32);
        }
        total += gaussian_binomial(n, i, q) * &falling;
    }
    total
}

/// Smallest `t` with `t(m + n - t) >= m(n - k)`.
pub fn gv_distance_approx(m: usize, n: usize, k: usize) -> usize {
    debug_assert!(k <= n);
    let target = m * (n - k);
    (0..=m.min(n))
        .find(|&t| t * (m + n - t) >= target)
        .unwrap_or(m.min(n))
}

/// Smallest `t` with `|B_t| >= q^(m(n - k))`, counted exactly.
pub fn gv_distance_exact(m: usize, n: usize, k: usize, q: u32) -> usize {
    debug_assert!(k <= n);
    let target = BigUint::from(q).pow((m * (n - k)) as u32);
    (0..=m.min(n))
        .find(|&t| rank_ball_size(m, n, t, q) >= target)
        .unwrap_or(m.min(n))
}

/// `log2` of a big integer, accurate to `f64` precision. `-inf` for zero.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().map_or(f64::NEG_INFINITY, |v| (v as f64).log2());
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 significant bits");
    (top as f64).log2() + shift as f64
}
