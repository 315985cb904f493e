//! Fixed-length binary decision vectors.
//!
//! Position 1 is the leftmost bit and maps to the most significant bit of the
//! integer index, so `"1000"` has index 8.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported bit length.
pub const MAX_LEN: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitStringError {
    #[error("bit length {0} outside 1..={MAX_LEN}")]
    BadLength(usize),
    #[error("index {index} does not fit in {len} bits")]
    IndexOutOfRange { index: u64, len: usize },
    #[error("invalid character {0:?} in bit-string literal")]
    BadChar(char),
    #[error("length {len} is not divisible by block length {block_len}")]
    NotDivisible { len: usize, block_len: usize },
}

/// A bit-string of length `1..=63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: u64,
    len: u8,
}

/// Ones and zeroes inside one block of a block partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCount {
    pub ones: usize,
    pub zeroes: usize,
}

impl BlockCount {
    pub fn is_ones(&self) -> bool {
        self.zeroes == 0
    }

    pub fn is_zeroes(&self) -> bool {
        self.ones == 0
    }

    pub fn is_complete(&self) -> bool {
        self.is_ones() || self.is_zeroes()
    }
}

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BitString {
    pub fn from_index(index: u64, len: usize) -> Result<Self, BitStringError> {
        check_len(len)?;
        if index > low_mask(len) {
            return Err(BitStringError::IndexOutOfRange { index, len });
        }
        Ok(Self { bits: index, len: len as u8 })
    }

    /// Caller guarantees `1 <= len <= 63` and `index < 2^len`.
    #[inline]
    pub(crate) fn from_index_unchecked(index: u64, len: usize) -> Self {
        debug_assert!((1..=MAX_LEN).contains(&len) && index <= low_mask(len));
        Self { bits: index, len: len as u8 }
    }

    pub fn zeros(len: usize) -> Result<Self, BitStringError> {
        Self::from_index(0, len)
    }

    pub fn ones(len: usize) -> Result<Self, BitStringError> {
        check_len(len)?;
        Ok(Self { bits: low_mask(len), len: len as u8 })
    }

    /// Builds from bits in position order (position 1 first).
    pub fn from_bits(bits: &[bool]) -> Result<Self, BitStringError> {
        check_len(bits.len())?;
        let index = bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        Ok(Self { bits: index, len: bits.len() as u8 })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn index(&self) -> u64 {
        self.bits
    }

    /// Bit at 1-based `position`.
    #[inline]
    pub fn get(&self, position: usize) -> bool {
        assert!(position >= 1 && position <= self.len(), "position {position} out of range");
        (self.bits >> (self.len() - position)) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len()).map(move |p| self.get(p))
    }

    #[inline]
    pub fn count_ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn count_zeroes(&self) -> usize {
        self.len() - self.count_ones()
    }

    #[inline]
    pub fn complement(&self) -> Self {
        Self { bits: !self.bits & low_mask(self.len()), len: self.len }
    }

    #[inline]
    pub fn reverse(&self) -> Self {
        let bits = self.bits.reverse_bits() >> (64 - self.len());
        Self { bits, len: self.len }
    }

    /// Copy with the bit at 1-based `position` inverted.
    #[inline]
    pub fn flip(&self, position: usize) -> Self {
        assert!(position >= 1 && position <= self.len(), "position {position} out of range");
        Self { bits: self.bits ^ (1u64 << (self.len() - position)), len: self.len }
    }

    /// The `n` Hamming-1 neighbours, flipping positions `1..=n` in order.
    pub fn neighbors(&self) -> Vec<BitString> {
        (1..=self.len()).map(|p| self.flip(p)).collect()
    }

    pub fn hamming(&self, other: &BitString) -> usize {
        assert_eq!(self.len, other.len, "hamming distance of unequal lengths");
        (self.bits ^ other.bits).count_ones() as usize
    }

    /// Per-block (ones, zeroes) for consecutive blocks of `block_len` bits.
    pub fn blocks(&self, block_len: usize) -> Result<Vec<BlockCount>, BitStringError> {
        if block_len == 0 || !self.len().is_multiple_of(block_len) {
            return Err(BitStringError::NotDivisible { len: self.len(), block_len });
        }
        Ok(self.block_iter(block_len).collect())
    }

    /// Caller guarantees `block_len` divides the length.
    pub(crate) fn block_iter(&self, block_len: usize) -> impl Iterator<Item = BlockCount> + '_ {
        let n = self.len();
        let mask = low_mask(block_len);
        (1..=n / block_len).map(move |j| {
            let ones = ((self.bits >> (n - j * block_len)) & mask).count_ones() as usize;
            BlockCount { ones, zeroes: block_len - ones }
        })
    }
}

fn check_len(len: usize) -> Result<(), BitStringError> {
    if (1..=MAX_LEN).contains(&len) {
        Ok(())
    } else {
        Err(BitStringError::BadLength(len))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = BitStringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(BitStringError::BadChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_bits(&bits)
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn count_ones_examples() {
        assert_eq!(bs("11111111").count_ones(), 8);
        assert_eq!(bs("00000000").count_ones(), 0);
        assert_eq!(bs("10110010").count_ones(), 4);
    }

    #[test]
    fn complement_and_reverse_examples() {
        assert_eq!(bs("1010").complement(), bs("0101"));
        assert_eq!(bs("0000").complement(), bs("1111"));
        assert_eq!(bs("1100").reverse(), bs("0011"));
        assert_eq!(bs("10110").reverse(), bs("01101"));
    }

    #[test]
    fn neighbors_in_position_order() {
        assert_eq!(bs("00").neighbors(), vec![bs("10"), bs("01")]);
        assert_eq!(bs("111").neighbors(), vec![bs("011"), bs("101"), bs("110")]);
    }

    #[test]
    fn blocks_examples() {
        let c = |ones, zeroes| BlockCount { ones, zeroes };
        assert_eq!(bs("11110000").blocks(4).unwrap(), vec![c(4, 0), c(0, 4)]);
        assert_eq!(
            bs("11001100").blocks(2).unwrap(),
            vec![c(2, 0), c(0, 2), c(2, 0), c(0, 2)]
        );
        assert_eq!(
            bs("10110010").blocks(3),
            Err(BitStringError::NotDivisible { len: 8, block_len: 3 })
        );
    }

    #[test]
    fn index_encoding_puts_position_one_first() {
        assert_eq!(bs("1000").index(), 8);
        assert_eq!(BitString::from_index(1, 4).unwrap().to_string(), "0001");
        assert!(BitString::from_index(16, 4).is_err());
        assert!(BitString::from_index(0, 0).is_err());
        assert!(BitString::from_index(0, 64).is_err());
        assert!("10a".parse::<BitString>().is_err());
    }

    #[test]
    fn full_width_strings() {
        let x = BitString::ones(63).unwrap();
        assert_eq!(x.count_ones(), 63);
        assert_eq!(x.complement().count_ones(), 0);
        assert_eq!(x.reverse(), x);
    }

    fn arb_bitstring() -> impl Strategy<Value = BitString> {
        (1usize..=MAX_LEN).prop_flat_map(|n| {
            (0..=low_mask(n)).prop_map(move |i| BitString::from_index(i, n).unwrap())
        })
    }

    proptest! {
        #[test]
        fn involutions_commute(x in arb_bitstring()) {
            prop_assert_eq!(x.complement().complement(), x);
            prop_assert_eq!(x.reverse().reverse(), x);
            prop_assert_eq!(x.complement().reverse(), x.reverse().complement());
            prop_assert_eq!(x.count_ones() + x.complement().count_ones(), x.len());
        }

        #[test]
        fn text_and_index_round_trip(x in arb_bitstring()) {
            prop_assert_eq!(x.to_string().parse::<BitString>().unwrap(), x);
            prop_assert_eq!(BitString::from_index(x.index(), x.len()).unwrap(), x);
        }

        #[test]
        fn neighbors_are_distinct_at_distance_one(x in arb_bitstring()) {
            let nb = x.neighbors();
            prop_assert_eq!(nb.len(), x.len());
            for (i, y) in nb.iter().enumerate() {
                prop_assert_eq!(x.hamming(y), 1);
                for z in &nb[i + 1..] {
                    prop_assert_ne!(y, z);
                }
            }
        }

        #[test]
        fn block_ones_sum_to_count(x in arb_bitstring(), l in 1usize..8) {
            if let Ok(blocks) = x.blocks(l) {
                prop_assert_eq!(blocks.iter().map(|b| b.ones).sum::<usize>(), x.count_ones());
            } else {
                prop_assert!(x.len() % l != 0);
            }
        }
    }
}
