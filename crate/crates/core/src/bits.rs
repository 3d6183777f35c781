//! Bit-string helpers. Bit `i` of a byte is `(byte >> i) & 1` throughout.

use bitvec::prelude::*;

/// Owned LSB-first bit string.
pub type Bits = BitVec<u8, Lsb0>;
/// Borrowed LSB-first bit string.
pub type BitStr = BitSlice<u8, Lsb0>;

/// Reads `len <= 128` bits starting at `start`, bit `start` landing in bit 0.
#[inline]
pub fn read_u128(bits: &BitStr, start: usize, len: usize) -> u128 {
    debug_assert!(len <= 128);
    bits[start..start + len]
        .iter_ones()
        .fold(0u128, |acc, i| acc | (1u128 << i))
}

/// Appends the low `len` bits of `value`.
#[inline]
pub fn push_u128(out: &mut Bits, value: u128, len: usize) {
    debug_assert!(len <= 128);
    let bytes = value.to_le_bytes();
    out.extend_from_bitslice(&bytes.view_bits::<Lsb0>()[..len]);
}

/// Packs into bytes, zero-padding the final byte.
pub fn to_bytes(bits: &BitStr) -> Vec<u8> {
    let mut owned = bits.to_bitvec();
    owned.set_uninitialized(false);
    owned.into_vec()
}

/// The first `len` bits of `bytes`; errors if any bit past `len` is set.
pub fn from_bytes(bytes: &[u8], len: usize) -> Option<Bits> {
    let view = bytes.view_bits::<Lsb0>();
    if view.len() < len || view[len..].any() || bytes.len() != len.div_ceil(8) {
        return None;
    }
    Some(view[..len].to_bitvec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lsb_first_convention() {
        let b = from_bytes(&[0b0000_0101], 8).unwrap();
        assert!(b[0] && !b[1] && b[2]);
        assert_eq!(read_u128(&b, 0, 3), 0b101);
    }

    #[test]
    fn padding_is_checked() {
        assert!(from_bytes(&[0xff], 7).is_none());
        assert!(from_bytes(&[0x7f], 7).is_some());
        assert!(from_bytes(&[0x7f, 0], 7).is_none());
    }

    proptest! {
        #[test]
        fn push_read_round_trip(value: u128, len in 0usize..=128, prefix in 0usize..20) {
            let mut out = Bits::repeat(true, prefix);
            let masked = if len == 128 { value } else { value & ((1u128 << len) - 1) };
            push_u128(&mut out, value, len);
            prop_assert_eq!(out.len(), prefix + len);
            prop_assert_eq!(read_u128(&out, prefix, len), masked);
            let bytes = to_bytes(&out);
            prop_assert_eq!(from_bytes(&bytes, out.len()).unwrap(), out);
        }
    }
}
