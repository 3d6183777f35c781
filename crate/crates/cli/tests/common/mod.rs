//! Independent reference implementations for the acceptance suite.
#![allow(dead_code)]

use std::sync::{Mutex, MutexGuard};
use std::time::Duration;

static SERIAL: Mutex<()> = Mutex::new(());

/// Runs criteria one at a time so timings are not skewed by each other.
pub fn serial() -> MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

/// Prints the one-line verdict for a criterion and returns `pass`.
pub fn verdict(id: &str, title: &str, pass: bool, detail: &str, elapsed: Duration) -> bool {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!(
        "[{tag}] {id} {title}: {detail} ({:.3} s)",
        elapsed.as_secs_f64()
    );
    pass
}

/// Shift-and-add product of two polynomials of degree < n, reduced bit by
/// bit modulo `modulus` (which includes the x^n term).
pub fn schoolbook_mul(a: u128, b: u128, modulus: u128, n: usize) -> u128 {
    let mut acc = [0u128; 2];
    for i in 0..n {
        if (b >> i) & 1 == 1 {
            acc[0] ^= a << i;
            if i > 0 {
                acc[1] ^= a >> (128 - i);
            }
        }
    }
    for bit in (n..2 * n).rev() {
        let set = if bit < 128 {
            (acc[0] >> bit) & 1
        } else {
            (acc[1] >> (bit - 128)) & 1
        };
        if set == 1 {
            let shift = bit - n;
            acc[0] ^= modulus << shift;
            if shift > 0 {
                acc[1] ^= modulus >> (128 - shift);
            }
        }
    }
    acc[0]
}

/// Rank of a 0/1 matrix given as rows of bit masks, from the size of the
/// row span: enumerate every subset of rows and count distinct sums.
pub fn rank_by_span(rows: &[u64]) -> usize {
    let mut seen = std::collections::HashSet::new();
    for subset in 0u32..(1 << rows.len()) {
        let sum = rows
            .iter()
            .enumerate()
            .filter(|(i, _)| (subset >> i) & 1 == 1)
            .fold(0u64, |acc, (_, r)| acc ^ r);
        seen.insert(sum);
    }
    seen.len().trailing_zeros() as usize
}

/// All `rows x cols` binary matrices as row masks.
pub fn all_matrices(rows: usize, cols: usize) -> impl Iterator<Item = Vec<u64>> {
    let cells = rows * cols;
    (0u64..(1 << cells)).map(move |code| {
        (0..rows)
            .map(|r| (code >> (r * cols)) & ((1 << cols) - 1))
            .collect()
    })
}

/// Number of `m x n` binary matrices of rank at most `t`, by enumeration.
pub fn ball_by_enumeration(m: usize, n: usize, t: usize) -> u64 {
    all_matrices(m, n)
        .filter(|rows| rank_by_span(rows) <= t)
        .count() as u64
}

/// Smallest `t` whose enumerated rank ball reaches `2^(m(n-k))`.
pub fn gv_by_enumeration(m: usize, n: usize, k: usize) -> usize {
    let target = 1u64 << (m * (n - k));
    (0..=m.min(n))
        .find(|&t| ball_by_enumeration(m, n, t) >= target)
        .unwrap_or(m.min(n) + 1)
}
