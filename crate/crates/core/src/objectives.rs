//! Single-objective pseudo-Boolean functions. All are maximised.

use thiserror::Error;

use crate::bitstring::{low_mask, BitString};

/// Non-negative fitness of one objective.
pub type ObjectiveValue = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObjectiveError {
    #[error("jump parameter k={k} outside 1..={n}")]
    BadJump { k: usize, n: usize },
    #[error("block length {block_len} does not divide n={n}")]
    NotDivisible { block_len: usize, n: usize },
    #[error("block length {block_len} leaves fewer than two blocks for n={n}")]
    TooFewBlocks { block_len: usize, n: usize },
    #[error("CountOnes needs an even length, got n={0}")]
    OddLength(usize),
}

pub fn one_max(x: &BitString) -> ObjectiveValue {
    x.count_ones() as ObjectiveValue
}

pub fn leading_ones(x: &BitString) -> ObjectiveValue {
    let n = x.len();
    (x.index() << (64 - n)).leading_ones().min(n as u32)
}

pub fn trailing_zeroes(x: &BitString) -> ObjectiveValue {
    x.index().trailing_zeros().min(x.len() as u32)
}

/// Jump value for a string with `ones` ones among `n`: `k + ones` outside the
/// valley `(n-k, n)`, otherwise `n - ones`.
#[inline]
pub(crate) fn jump_value(ones: usize, n: usize, k: usize) -> ObjectiveValue {
    if ones + k <= n || ones == n {
        (k + ones) as ObjectiveValue
    } else {
        (n - ones) as ObjectiveValue
    }
}

pub fn one_jump(x: &BitString, k: usize) -> Result<ObjectiveValue, ObjectiveError> {
    check_jump(x.len(), k)?;
    Ok(jump_value(x.count_ones(), x.len(), k))
}

pub fn zero_jump(x: &BitString, k: usize) -> Result<ObjectiveValue, ObjectiveError> {
    check_jump(x.len(), k)?;
    Ok(jump_value(x.count_zeroes(), x.len(), k))
}

/// Number of all-ones blocks of length `block_len` in `bits` (low `n` bits).
#[inline]
pub(crate) fn full_blocks(bits: u64, n: usize, block_len: usize) -> usize {
    let mask = low_mask(block_len);
    (0..n / block_len)
        .filter(|j| (bits >> (j * block_len)) & mask == mask)
        .count()
}

pub fn one_royal_road(x: &BitString, block_len: usize) -> Result<ObjectiveValue, ObjectiveError> {
    check_blocks(x.len(), block_len)?;
    Ok((block_len * full_blocks(x.index(), x.len(), block_len)) as ObjectiveValue)
}

pub fn zero_royal_road(x: &BitString, block_len: usize) -> Result<ObjectiveValue, ObjectiveError> {
    one_royal_road(&x.complement(), block_len)
}

/// CountOnes: ones in the first half plus zeroes in the second half.
pub fn count_ones_mix(x: &BitString) -> Result<ObjectiveValue, ObjectiveError> {
    if !x.len().is_multiple_of(2) {
        return Err(ObjectiveError::OddLength(x.len()));
    }
    Ok(count_ones_mix_unchecked(x.index(), x.len()))
}

#[inline]
pub(crate) fn count_ones_mix_unchecked(bits: u64, n: usize) -> ObjectiveValue {
    let half = n / 2;
    let first = (bits >> half).count_ones() as usize;
    let second_zeroes = half - (bits & low_mask(half)).count_ones() as usize;
    (first + second_zeroes) as ObjectiveValue
}

pub(crate) fn check_jump(n: usize, k: usize) -> Result<(), ObjectiveError> {
    if (1..=n).contains(&k) {
        Ok(())
    } else {
        Err(ObjectiveError::BadJump { k, n })
    }
}

pub(crate) fn check_blocks(n: usize, block_len: usize) -> Result<(), ObjectiveError> {
    if block_len == 0 || !n.is_multiple_of(block_len) {
        return Err(ObjectiveError::NotDivisible { block_len, n });
    }
    if n / block_len < 2 {
        return Err(ObjectiveError::TooFewBlocks { block_len, n });
    }
    Ok(())
}
