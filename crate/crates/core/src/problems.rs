//! The eleven bi-objective benchmark families.
//!
//! Instances are validated once at construction; evaluation never fails on a
//! correctly sized input. Descriptors use the compact grammar
//! `family:n=..,k=..,l=..`, e.g. `ojzr:n=12,k=5,l=3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitstring::{low_mask, BitString, MAX_LEN};
use crate::objectives::{count_ones_mix_unchecked, full_blocks, jump_value, ObjectiveValue};

/// A pair of objective values `(f1, f2)`, both maximised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ObjectiveVector {
    pub f1: ObjectiveValue,
    pub f2: ObjectiveValue,
}

impl ObjectiveVector {
    pub const fn new(f1: ObjectiveValue, f2: ObjectiveValue) -> Self {
        Self { f1, f2 }
    }
}

impl fmt::Display for ObjectiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.f1, self.f2)
    }
}

impl From<(ObjectiveValue, ObjectiveValue)> for ObjectiveVector {
    fn from((f1, f2): (ObjectiveValue, ObjectiveValue)) -> Self {
        Self { f1, f2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Omm,
    Lotz,
    Ojzj,
    Cocz,
    Orzr,
    Omtz,
    Omzj,
    Omzr,
    Lozj,
    Lozr,
    Ojzr,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Omm,
        Family::Lotz,
        Family::Ojzj,
        Family::Cocz,
        Family::Orzr,
        Family::Omtz,
        Family::Omzj,
        Family::Omzr,
        Family::Lozj,
        Family::Lozr,
        Family::Ojzr,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            Family::Omm => "omm",
            Family::Lotz => "lotz",
            Family::Ojzj => "ojzj",
            Family::Cocz => "cocz",
            Family::Orzr => "orzr",
            Family::Omtz => "omtz",
            Family::Omzj => "omzj",
            Family::Omzr => "omzr",
            Family::Lozj => "lozj",
            Family::Lozr => "lozr",
            Family::Ojzr => "ojzr",
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            Family::Omm => "OneMinMax",
            Family::Lotz => "LeadingOnes-TrailingZeroes",
            Family::Ojzj => "OneJump-ZeroJump",
            Family::Cocz => "CountOnes-CountZeroes",
            Family::Orzr => "OneRoyalRoad-ZeroRoyalRoad",
            Family::Omtz => "OneMax-TrailingZeroes",
            Family::Omzj => "OneMax-ZeroJump",
            Family::Omzr => "OneMax-ZeroRoyalRoad",
            Family::Lozj => "LeadingOnes-ZeroJump",
            Family::Lozr => "LeadingOnes-ZeroRoyalRoad",
            Family::Ojzr => "OneJump-ZeroRoyalRoad",
        }
    }

    pub fn needs_jump(self) -> bool {
        matches!(self, Family::Ojzj | Family::Omzj | Family::Lozj | Family::Ojzr)
    }

    pub fn needs_block_len(self) -> bool {
        matches!(self, Family::Orzr | Family::Omzr | Family::Lozr | Family::Ojzr)
    }

    /// Names of the two component objectives.
    pub fn components(self) -> (&'static str, &'static str) {
        match self {
            Family::Omm => ("OneMax", "OneMin"),
            Family::Lotz => ("LeadingOnes", "TrailingZeroes"),
            Family::Ojzj => ("OneJump", "ZeroJump"),
            Family::Cocz => ("OneMax", "CountOnes"),
            Family::Orzr => ("OneRoyalRoad", "ZeroRoyalRoad"),
            Family::Omtz => ("OneMax", "TrailingZeroes"),
            Family::Omzj => ("OneMax", "ZeroJump"),
            Family::Omzr => ("OneMax", "ZeroRoyalRoad"),
            Family::Lozj => ("LeadingOnes", "ZeroJump"),
            Family::Lozr => ("LeadingOnes", "ZeroRoyalRoad"),
            Family::Ojzr => ("OneJump", "ZeroRoyalRoad"),
        }
    }

    fn constraint_text(self) -> &'static str {
        match self {
            Family::Omm | Family::Lotz | Family::Omtz => "1 <= n <= 63",
            Family::Cocz => "n even",
            Family::Ojzj => "1 <= k < n/2",
            Family::Omzj | Family::Lozj => "1 < k < n/2",
            Family::Orzr | Family::Omzr | Family::Lozr => "n = b*l, b > 1",
            Family::Ojzr => "1 < k <= floor(n/2), n = b*l, b > 1",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Family {
    type Err = ProblemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.short_name() == lower)
            .ok_or(ProblemError::UnknownFamily(s.trim().to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("n={0} outside 1..={MAX_LEN}")]
    BadLength(usize),
    #[error("{family} requires a jump parameter k")]
    MissingJump { family: Family },
    #[error("{family} takes no jump parameter")]
    UnexpectedJump { family: Family },
    #[error("{family} requires a block length l")]
    MissingBlockLen { family: Family },
    #[error("{family} takes no block length")]
    UnexpectedBlockLen { family: Family },
    #[error("{family}: k={k} violates lower bound k >= {min}")]
    JumpTooSmall { family: Family, k: usize, min: usize },
    #[error("{family}: k={k} violates upper bound {bound}")]
    JumpTooLarge { family: Family, k: usize, bound: &'static str },
    #[error("{family}: n={n} mod l={block_len} != 0")]
    NotDivisible { family: Family, n: usize, block_len: usize },
    #[error("{family}: l={block_len} gives b={blocks}, need b > 1")]
    TooFewBlocks { family: Family, block_len: usize, blocks: usize },
    #[error("{family}: n={n} must be even")]
    OddLength { family: Family, n: usize },
    #[error("instance has n={expected}, bit-string has length {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("malformed descriptor {0:?}; expected family:n=..[,k=..][,l=..]")]
    Malformed(String),
}

/// A validated benchmark instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProblemInstance {
    family: Family,
    n: usize,
    k: Option<usize>,
    block_len: Option<usize>,
}

impl ProblemInstance {
    pub fn new(
        family: Family,
        n: usize,
        k: Option<usize>,
        block_len: Option<usize>,
    ) -> Result<Self, ProblemError> {
        validate(family, n, k, block_len)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn block_len(&self) -> Option<usize> {
        self.block_len
    }

    /// Number of blocks `b = n / l`, when the family has blocks.
    pub fn blocks(&self) -> Option<usize> {
        self.block_len.map(|l| self.n / l)
    }

    pub fn evaluate(&self, x: &BitString) -> Result<ObjectiveVector, ProblemError> {
        if x.len() != self.n {
            return Err(ProblemError::LengthMismatch { expected: self.n, actual: x.len() });
        }
        Ok(self.evaluate_index(x.index()))
    }

    /// Evaluates the solution with integer index `bits` (caller keeps it below `2^n`).
    #[inline]
    pub fn evaluate_index(&self, bits: u64) -> ObjectiveVector {
        let n = self.n;
        let mask = low_mask(n);
        let ones = bits.count_ones() as usize;
        let zeroes = n - ones;
        let k = self.k.unwrap_or(0);
        let l = self.block_len.unwrap_or(1);
        let lead = || ((bits << (64 - n)).leading_ones() as usize).min(n) as ObjectiveValue;
        let trail = || (bits.trailing_zeros() as usize).min(n) as ObjectiveValue;
        let one_rr = || (l * full_blocks(bits, n, l)) as ObjectiveValue;
        let zero_rr = || (l * full_blocks(!bits & mask, n, l)) as ObjectiveValue;
        let (f1, f2) = match self.family {
            Family::Omm => (ones as ObjectiveValue, zeroes as ObjectiveValue),
            Family::Lotz => (lead(), trail()),
            Family::Ojzj => (jump_value(ones, n, k), jump_value(zeroes, n, k)),
            Family::Cocz => (ones as ObjectiveValue, count_ones_mix_unchecked(bits, n)),
            Family::Orzr => (one_rr(), zero_rr()),
            Family::Omtz => (ones as ObjectiveValue, trail()),
            Family::Omzj => (ones as ObjectiveValue, jump_value(zeroes, n, k)),
            Family::Omzr => (ones as ObjectiveValue, zero_rr()),
            Family::Lozj => (lead(), jump_value(zeroes, n, k)),
            Family::Lozr => (lead(), zero_rr()),
            Family::Ojzr => (jump_value(ones, n, k), zero_rr()),
        };
        ObjectiveVector { f1, f2 }
    }

    /// Number of points in the search space.
    pub fn space_size(&self) -> u64 {
        1u64 << self.n
    }
}

/// Checks every family constraint and builds the instance.
pub fn validate(
    family: Family,
    n: usize,
    k: Option<usize>,
    block_len: Option<usize>,
) -> Result<ProblemInstance, ProblemError> {
    if !(1..=MAX_LEN).contains(&n) {
        return Err(ProblemError::BadLength(n));
    }
    match (family.needs_jump(), k) {
        (true, None) => return Err(ProblemError::MissingJump { family }),
        (false, Some(_)) => return Err(ProblemError::UnexpectedJump { family }),
        _ => {}
    }
    match (family.needs_block_len(), block_len) {
        (true, None) => return Err(ProblemError::MissingBlockLen { family }),
        (false, Some(_)) => return Err(ProblemError::UnexpectedBlockLen { family }),
        _ => {}
    }
    if let Some(k) = k {
        let (min, upper_ok, bound) = match family {
            Family::Ojzj => (1, 2 * k < n, "k < n/2"),
            Family::Omzj | Family::Lozj => (2, 2 * k < n, "k < n/2"),
            Family::Ojzr => (2, k <= n / 2, "k <= floor(n/2)"),
            _ => unreachable!("jump parameter checked above"),
        };
        if k < min {
            return Err(ProblemError::JumpTooSmall { family, k, min });
        }
        if !upper_ok {
            return Err(ProblemError::JumpTooLarge { family, k, bound });
        }
    }
    if let Some(l) = block_len {
        if l == 0 || !n.is_multiple_of(l) {
            return Err(ProblemError::NotDivisible { family, n, block_len: l });
        }
        if n / l < 2 {
            return Err(ProblemError::TooFewBlocks { family, block_len: l, blocks: n / l });
        }
    }
    if family == Family::Cocz && !n.is_multiple_of(2) {
        return Err(ProblemError::OddLength { family, n });
    }
    Ok(ProblemInstance { family, n, k, block_len })
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:n={}", self.family, self.n)?;
        if let Some(k) = self.k {
            write!(f, ",k={k}")?;
        }
        if let Some(l) = self.block_len {
            write!(f, ",l={l}")?;
        }
        Ok(())
    }
}

/// A parsed but unvalidated descriptor; `n` is not bounded by the bit-string width.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawDescriptor {
    pub family: Family,
    pub n: usize,
    pub k: Option<usize>,
    pub block_len: Option<usize>,
}

impl RawDescriptor {
    pub fn validate(&self) -> Result<ProblemInstance, ProblemError> {
        validate(self.family, self.n, self.k, self.block_len)
    }
}

impl FromStr for RawDescriptor {
    type Err = ProblemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || ProblemError::Malformed(s.to_string());
        let (family, params) = s.split_once(':').ok_or_else(malformed)?;
        let family: Family = family.parse()?;
        let (mut n, mut k, mut l) = (None, None, None);
        for part in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(malformed)?;
            let value: usize = value.trim().parse().map_err(|_| malformed())?;
            let slot = match key.trim().to_ascii_lowercase().as_str() {
                "n" => &mut n,
                "k" => &mut k,
                "l" => &mut l,
                _ => return Err(malformed()),
            };
            if slot.replace(value).is_some() {
                return Err(malformed());
            }
        }
        Ok(RawDescriptor { family, n: n.ok_or_else(malformed)?, k, block_len: l })
    }
}

impl FromStr for ProblemInstance {
    type Err = ProblemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<RawDescriptor>()?.validate()
    }
}

impl Serialize for ProblemInstance {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ProblemInstance {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyDescriptor {
    pub family: Family,
    pub name: &'static str,
    pub objectives: (&'static str, &'static str),
    pub needs_jump: bool,
    pub needs_block_len: bool,
    pub constraints: &'static str,
}

pub fn family_catalog() -> Vec<FamilyDescriptor> {
    Family::ALL
        .into_iter()
        .map(|family| FamilyDescriptor {
            family,
            name: family.long_name(),
            objectives: family.components(),
            needs_jump: family.needs_jump(),
            needs_block_len: family.needs_block_len(),
            constraints: family.constraint_text(),
        })
        .collect()
}
