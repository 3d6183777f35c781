//! Binary extension fields GF(2^n) in polynomial basis.
//!
//! Elements are packed into a `u128`: bit `i` is the coefficient of `x^i`,
//! which is also the coordinate on the `i`-th basis vector when a word is
//! unfolded into a binary matrix. Degrees 1 through 127 are supported, which
//! covers every parameter set in [`crate::params`].
//!
//! The modulus for degree `n` is the irreducible polynomial of degree `n`
//! whose coefficient vector, read as an integer, is smallest. Two
//! implementations agreeing on `n` therefore agree on the field.

use std::fmt;
use std::ops::{Add, AddAssign};
use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 127;

/// A binary polynomial of degree at most 127, bit `i` = coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyBits(u128);

impl PolyBits {
    pub const fn new(bits: u128) -> Self {
        PolyBits(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    pub fn coeff(self, i: usize) -> bool {
        i < 128 && (self.0 >> i) & 1 == 1
    }

    /// Rabin's test: `p` of degree `n` is irreducible iff `x^(2^n) = x mod p`
    /// and `gcd(x^(2^(n/r)) - x, p) = 1` for every prime `r | n`.
    pub fn is_irreducible(self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        let p = self.0;
        let x = 2u128 % p;
        if n == 1 {
            return true;
        }
        // frob[i] = x^(2^i) mod p
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(x);
        for i in 0..n {
            let prev = frob[i];
            frob.push(poly_mulmod(prev, prev, p, n));
        }
        if frob[n] != x {
            return false;
        }
        prime_factors(n)
            .into_iter()
            .all(|r| poly_gcd(frob[n / r] ^ x, p) == 1)
    }
}

impl fmt::Debug for PolyBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyBits({self})")
    }
}

impl fmt::Display for PolyBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=deg).rev().filter(|&i| self.coeff(i)) {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Carry-less product of two 64-bit polynomials, 4-bit windowed.
#[inline]
fn clmul64(a: u64, b: u64) -> u128 {
    let mut table = [0u128; 16];
    table[1] = a as u128;
    for i in 2..16 {
        table[i] = if i % 2 == 0 {
            table[i / 2] << 1
        } else {
            table[i - 1] ^ table[1]
        };
    }
    let mut acc = 0u128;
    for nibble in (0..16).rev() {
        acc = (acc << 4) ^ table[((b >> (4 * nibble)) & 0xf) as usize];
    }
    acc
}

/// Carry-less product of two 128-bit polynomials as a (low, high) pair.
#[inline]
pub(crate) fn clmul128(a: u128, b: u128) -> (u128, u128) {
    let (a0, a1) = (a as u64, (a >> 64) as u64);
    let (b0, b1) = (b as u64, (b >> 64) as u64);
    let p00 = clmul64(a0, b0);
    if a1 == 0 && b1 == 0 {
        return (p00, 0);
    }
    let p11 = clmul64(a1, b1);
    let mid = clmul64(a0 ^ a1, b0 ^ b1) ^ p00 ^ p11;
    (p00 ^ (mid << 64), p11 ^ (mid >> 64))
}

/// Reduces a 256-bit polynomial modulo `x^n + tail` where `deg(tail) < n`.
///
/// Folds the part above `x^n` back through `tail` until nothing remains
/// above degree `n - 1`. Each fold lowers the degree by `n - deg(tail)`.
#[inline]
fn reduce_wide(mut lo: u128, mut hi: u128, tail: u128, n: usize) -> u128 {
    debug_assert!((1..=MAX_DEGREE).contains(&n));
    let mask = low_mask(n);
    loop {
        let high = (lo >> n) | (hi << (128 - n));
        // Elements of degree < 2n fit after one split; anything higher than
        // 128 + n bits never occurs for products of reduced elements.
        debug_assert!(hi >> n == 0);
        if high == 0 {
            return lo & mask;
        }
        let (flo, fhi) = clmul128(high, tail);
        lo = (lo & mask) ^ flo;
        hi = fhi;
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// `a * b mod p` for an arbitrary modulus of degree `n` (`a`, `b` reduced).
fn poly_mulmod(a: u128, b: u128, p: u128, n: usize) -> u128 {
    let (lo, hi) = clmul128(a, b);
    reduce_wide(lo, hi, p & low_mask(n), n)
}

fn poly_rem(mut a: u128, b: u128) -> u128 {
    let db = 127 - b.leading_zeros();
    while a != 0 {
        let da = 127 - a.leading_zeros();
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

fn poly_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Smallest (as an integer) irreducible binary polynomial of degree `n`.
///
/// Results are cached per degree; every call for the same `n` returns the
/// same polynomial.
pub fn find_irreducible(n: usize) -> Result<PolyBits> {
    static CACHE: [OnceLock<PolyBits>; MAX_DEGREE + 1] =
        [const { OnceLock::new() }; MAX_DEGREE + 1];
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::UnsupportedDegree(n));
    }
    Ok(*CACHE[n].get_or_init(|| {
        let lead = 1u128 << n;
        (0..lead)
            .map(|low| PolyBits(lead | low))
            .find(|p| p.is_irreducible())
            .expect("an irreducible polynomial exists in every degree")
    }))
}

/// An element of GF(2^n). Carries its degree so that mixing fields is caught.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    bits: u128,
    degree: u8,
}

impl FieldElement {
    pub fn bits(self) -> u128 {
        self.bits
    }

    pub fn degree(self) -> usize {
        self.degree as usize
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// Coordinate `i` on the polynomial basis.
    pub fn coeff(self, i: usize) -> bool {
        i < self.degree() && (self.bits >> i) & 1 == 1
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        if self.degree != rhs.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                got: rhs.degree(),
            });
        }
        Ok(FieldElement {
            bits: self.bits ^ rhs.bits,
            degree: self.degree,
        })
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2^{}({:#x})", self.degree, self.bits)
    }
}

/// Field addition (XOR).
///
/// # Panics
///
/// Panics if the operands belong to fields of different degree. Use
/// [`FieldElement::checked_add`] to get an error instead.
impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: Self) -> Self {
        match self.checked_add(rhs) {
            Ok(sum) => sum,
            Err(e) => panic!("{e}"),
        }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

/// GF(2^n) with the canonical modulus from [`find_irreducible`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Field {
    degree: usize,
    modulus: PolyBits,
    tail: u128,
}

impl Field {
    pub fn new(degree: usize) -> Result<Self> {
        let modulus = find_irreducible(degree)?;
        Ok(Field {
            degree,
            modulus,
            tail: modulus.bits() & low_mask(degree),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> PolyBits {
        self.modulus
    }

    pub fn element(&self, bits: u128) -> Result<FieldElement> {
        if bits & !low_mask(self.degree) != 0 {
            return Err(Error::ElementOutOfRange {
                bits,
                degree: self.degree,
            });
        }
        Ok(self.wrap(bits))
    }

    /// Builds an element from already-reduced bits. Caller guarantees range.
    #[inline]
    pub(crate) fn wrap(&self, bits: u128) -> FieldElement {
        debug_assert!(bits & !low_mask(self.degree) == 0);
        FieldElement {
            bits,
            degree: self.degree as u8,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1 % self.modulus.bits())
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        self.wrap(rng.random::<u128>() & low_mask(self.degree))
    }

    fn check(&self, a: FieldElement) {
        assert_eq!(
            a.degree(),
            self.degree,
            "element of GF(2^{}) used in GF(2^{})",
            a.degree(),
            self.degree
        );
    }

    /// Product reduced modulo the field polynomial.
    ///
    /// # Panics
    ///
    /// Panics if either operand is from a field of another degree.
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let (lo, hi) = clmul128(a.bits, b.bits);
        self.wrap(self.reduce(lo, hi))
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// `a^e` by square-and-multiply. `pow(0, 0)` is 1.
    pub fn pow(&self, a: FieldElement, mut e: u128) -> FieldElement {
        self.check(a);
        let mut base = a;
        let mut acc = self.one();
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Reduces an unreduced 256-bit product (or XOR of products).
    #[inline]
    pub(crate) fn reduce(&self, lo: u128, hi: u128) -> u128 {
        reduce_wide(lo, hi, self.tail, self.degree)
    }
}
