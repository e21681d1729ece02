//! Bit-level codec for the embedding pipeline.
//!
//! Bytes travel through the scheme in a reversed-bit representation:
//! each byte becomes eight bits written LSB-first. The resulting stream
//! is then partitioned by odd/even position into the two half-streams
//! that feed the two image shares, and interleaved back on extraction.

use crate::error::{Error, Result};

/// An ordered sequence of bits, each stored as `0u8` or `1u8`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitStream {
    bits: Vec<u8>,
}

impl BitStream {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            bits: Vec::with_capacity(bits),
        }
    }

    /// Builds a stream from raw bit values, rejecting anything that is
    /// not 0 or 1.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Result<Self> {
        let bits: Vec<u8> = bits.into_iter().collect();
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::MalformedSample(format!(
                "bit value {bad} is neither 0 nor 1"
            )));
        }
        Ok(Self { bits })
    }

    /// Appends one bit.
    ///
    /// Panics if `bit` is not 0 or 1; all in-crate producers only push
    /// masked single-bit values.
    pub fn push(&mut self, bit: u8) {
        assert!(bit <= 1, "bit value {bit} is neither 0 nor 1");
        self.bits.push(bit);
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Shortens the stream to at most `len` bits.
    pub fn truncate(&mut self, len: usize) {
        self.bits.truncate(len);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u8> {
        self.bits.iter()
    }
}

/// Encodes a byte as eight bits written LSB-first, i.e. output bit `j`
/// is bit `j` of `b` counted from the least significant end.
pub fn byte_to_reversed_bits(b: u8) -> BitStream {
    let mut out = BitStream::with_capacity(8);
    for j in 0..8 {
        out.push((b >> j) & 1);
    }
    out
}

/// Decodes exactly eight LSB-first bits back into a byte.
///
/// Inverse of [`byte_to_reversed_bits`].
pub fn reversed_bits_to_byte(s: &BitStream) -> Result<u8> {
    if s.len() != 8 {
        return Err(Error::MalformedBlock { bits: s.len() });
    }
    let mut b = 0u8;
    for (j, &bit) in s.iter().enumerate() {
        b |= bit << j;
    }
    Ok(b)
}

/// Encodes a byte sequence as one stream: each byte contributes its
/// eight LSB-first bits, in message order.
pub fn bytes_to_reversed_bits(bytes: &[u8]) -> BitStream {
    let mut out = BitStream::with_capacity(bytes.len() * 8);
    for &b in bytes {
        for j in 0..8 {
            out.push((b >> j) & 1);
        }
    }
    out
}

/// Slices a stream into 8-bit blocks and decodes each one.
///
/// Inverse of [`bytes_to_reversed_bits`]; the length must be a whole
/// number of blocks.
pub fn reversed_bits_to_bytes(s: &BitStream) -> Result<Vec<u8>> {
    if s.len() % 8 != 0 {
        return Err(Error::MalformedBlock { bits: s.len() });
    }
    let mut out = Vec::with_capacity(s.len() / 8);
    for block in s.bits().chunks(8) {
        let mut b = 0u8;
        for (j, &bit) in block.iter().enumerate() {
            b |= bit << j;
        }
        out.push(b);
    }
    Ok(out)
}

/// Splits a stream by position: the first output takes 1-based odd
/// positions (0-based indices 0, 2, 4, ...), the second takes 1-based
/// even positions, both in order.
pub fn split_odd_even(s: &BitStream) -> (BitStream, BitStream) {
    let mut odd = BitStream::with_capacity(s.len().div_ceil(2));
    let mut even = BitStream::with_capacity(s.len() / 2);
    for (i, &bit) in s.iter().enumerate() {
        if i % 2 == 0 {
            odd.push(bit);
        } else {
            even.push(bit);
        }
    }
    (odd, even)
}

/// Interleaves two half-streams back into one: output position `2k`
/// comes from `odd[k]`, position `2k + 1` from `even[k]`.
///
/// Inverse of [`split_odd_even`], so `odd` may hold at most one more
/// bit than `even`.
pub fn interleave(odd: &BitStream, even: &BitStream) -> Result<BitStream> {
    if odd.len() != even.len() && odd.len() != even.len() + 1 {
        return Err(Error::MalformedShares {
            share1: odd.len(),
            share2: even.len(),
        });
    }
    let mut out = BitStream::with_capacity(odd.len() + even.len());
    for k in 0..odd.len() {
        out.push(odd.bits()[k]);
        if k < even.len() {
            out.push(even.bits()[k]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: format the byte as an 8-char MSB-first binary
    /// string and reverse the string.
    fn reversed_bits_oracle(b: u8) -> Vec<u8> {
        format!("{b:08b}")
            .chars()
            .rev()
            .map(|c| if c == '1' { 1 } else { 0 })
            .collect()
    }

    /// Independent oracle for the partition: alternate-take over the
    /// sequence.
    fn split_oracle(bits: &[u8]) -> (Vec<u8>, Vec<u8>) {
        let odd = bits.iter().step_by(2).copied().collect();
        let even = bits.iter().skip(1).step_by(2).copied().collect();
        (odd, even)
    }

    #[test]
    fn byte_73_reverses_like_the_worked_example() {
        // 73 = 01001001 MSB-first, reversed to 10010010.
        let s = byte_to_reversed_bits(73);
        assert_eq!(s.bits(), &[1, 0, 0, 1, 0, 0, 1, 0]);
        assert_eq!(reversed_bits_to_byte(&s).unwrap(), 73);
    }

    #[test]
    fn byte_zero_reverses_to_zeros() {
        let s = byte_to_reversed_bits(0);
        assert_eq!(s.bits(), &[0; 8]);
        assert_eq!(reversed_bits_to_byte(&s).unwrap(), 0);
    }

    #[test]
    fn byte_67_matches_string_reversal_oracle() {
        // Frozen from reversed_bits_oracle(67).
        let s = byte_to_reversed_bits(67);
        assert_eq!(s.bits(), &[1, 1, 0, 0, 0, 0, 1, 0]);
        assert_eq!(s.bits(), reversed_bits_oracle(67).as_slice());
        assert_eq!(reversed_bits_to_byte(&s).unwrap(), 67);
    }

    #[test]
    fn every_byte_matches_oracle_and_round_trips() {
        for b in 0..=255u8 {
            let s = byte_to_reversed_bits(b);
            assert_eq!(s.bits(), reversed_bits_oracle(b).as_slice());
            assert_eq!(reversed_bits_to_byte(&s).unwrap(), b);
        }
    }

    #[test]
    fn decoding_rejects_wrong_block_length() {
        let short = BitStream::from_bits([1, 0, 1]).unwrap();
        assert_eq!(
            reversed_bits_to_byte(&short),
            Err(Error::MalformedBlock { bits: 3 })
        );
        let nine = BitStream::from_bits([0; 9]).unwrap();
        assert_eq!(
            reversed_bits_to_byte(&nine),
            Err(Error::MalformedBlock { bits: 9 })
        );
        assert_eq!(
            reversed_bits_to_bytes(&nine),
            Err(Error::MalformedBlock { bits: 9 })
        );
    }

    #[test]
    fn split_matches_worked_example_tables() {
        // sm1 and sm2 columns for the byte 73.
        let s = BitStream::from_bits([1, 0, 0, 1, 0, 0, 1, 0]).unwrap();
        let (odd, even) = split_odd_even(&s);
        assert_eq!(odd.bits(), &[1, 0, 0, 1]);
        assert_eq!(even.bits(), &[0, 1, 0, 0]);
    }

    #[test]
    fn split_of_empty_stream_is_empty() {
        let (odd, even) = split_odd_even(&BitStream::new());
        assert!(odd.is_empty());
        assert!(even.is_empty());
    }

    #[test]
    fn split_matches_alternate_take_oracle() {
        // Frozen from split_oracle([1,1,0,0,0,0,1,0]).
        let s = BitStream::from_bits([1, 1, 0, 0, 0, 0, 1, 0]).unwrap();
        let (odd, even) = split_odd_even(&s);
        assert_eq!(odd.bits(), &[1, 0, 0, 1]);
        assert_eq!(even.bits(), &[1, 0, 0, 0]);
        let (o, e) = split_oracle(s.bits());
        assert_eq!(odd.bits(), o.as_slice());
        assert_eq!(even.bits(), e.as_slice());
    }

    #[test]
    fn interleave_matches_worked_example() {
        let odd = BitStream::from_bits([1, 0, 0, 1]).unwrap();
        let even = BitStream::from_bits([0, 1, 0, 0]).unwrap();
        let s = interleave(&odd, &even).unwrap();
        assert_eq!(s.bits(), &[1, 0, 0, 1, 0, 0, 1, 0]);
        assert_eq!(reversed_bits_to_byte(&s).unwrap(), 73);
    }

    #[test]
    fn interleave_of_empty_halves_is_empty() {
        let s = interleave(&BitStream::new(), &BitStream::new()).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn interleave_inverts_derived_split() {
        let odd = BitStream::from_bits([1, 0, 0, 1]).unwrap();
        let even = BitStream::from_bits([1, 0, 0, 0]).unwrap();
        let s = interleave(&odd, &even).unwrap();
        assert_eq!(s.bits(), &[1, 1, 0, 0, 0, 0, 1, 0]);
    }

    #[test]
    fn interleave_rejects_unbalanced_halves() {
        let odd = BitStream::from_bits([1]).unwrap();
        let even = BitStream::from_bits([0, 0]).unwrap();
        assert_eq!(
            interleave(&odd, &even),
            Err(Error::MalformedShares {
                share1: 1,
                share2: 2
            })
        );
        let odd = BitStream::from_bits([1, 1, 1]).unwrap();
        let even = BitStream::from_bits([0]).unwrap();
        assert_eq!(
            interleave(&odd, &even),
            Err(Error::MalformedShares {
                share1: 3,
                share2: 1
            })
        );
    }

    #[test]
    fn from_bits_rejects_non_binary_values() {
        assert!(BitStream::from_bits([0, 1, 2]).is_err());
    }

    proptest! {
        #[test]
        fn partition_round_trips(bits in proptest::collection::vec(0u8..=1, 0..512)) {
            let s = BitStream::from_bits(bits).unwrap();
            let (odd, even) = split_odd_even(&s);
            prop_assert!(odd.len() == s.len().div_ceil(2));
            prop_assert!(even.len() == s.len() / 2);
            prop_assert_eq!(interleave(&odd, &even).unwrap(), s);
        }

        #[test]
        fn multi_byte_split_equals_per_byte_splits(msg in proptest::collection::vec(any::<u8>(), 0..64)) {
            // Each byte contributes an even number of bits, so splitting
            // the concatenated stream must equal concatenating the
            // per-byte splits.
            let whole = bytes_to_reversed_bits(&msg);
            let (odd, even) = split_odd_even(&whole);

            let mut odd_cat = BitStream::new();
            let mut even_cat = BitStream::new();
            for &b in &msg {
                let (o, e) = split_odd_even(&byte_to_reversed_bits(b));
                for &bit in o.iter() { odd_cat.push(bit); }
                for &bit in e.iter() { even_cat.push(bit); }
            }
            prop_assert_eq!(odd, odd_cat);
            prop_assert_eq!(even, even_cat);
        }

        #[test]
        fn byte_stream_round_trips(msg in proptest::collection::vec(any::<u8>(), 0..64)) {
            let s = bytes_to_reversed_bits(&msg);
            prop_assert_eq!(s.len(), msg.len() * 8);
            prop_assert_eq!(reversed_bits_to_bytes(&s).unwrap(), msg);
        }
    }
}
