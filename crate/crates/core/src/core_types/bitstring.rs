use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::rng::RngStream;

/// A fixed-length binary genotype x ∈ {0,1}ⁿ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: Vec<bool>,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum BitStringError {
    #[error("mutation probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("a bit string must contain at least one bit")]
    Empty,
    #[error("invalid character {0:?} in bit string literal (expected '0' or '1')")]
    InvalidCharacter(char),
}

impl BitString {
    /// Builds a bit string from explicit bits. At least one bit is required.
    pub fn new(bits: Vec<bool>) -> Result<Self, BitStringError> {
        if bits.is_empty() {
            return Err(BitStringError::Empty);
        }
        Ok(Self { bits })
    }

    /// The all-zeros string of length `n` (n ≥ 1).
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "encoding length must be at least 1");
        Self { bits: vec![false; n] }
    }

    /// The all-ones string of length `n` (n ≥ 1).
    pub fn ones(n: usize) -> Self {
        assert!(n >= 1, "encoding length must be at least 1");
        Self { bits: vec![true; n] }
    }

    /// A uniform random string of length `n` (n ≥ 1).
    pub fn random(n: usize, rng: &mut RngStream) -> Self {
        assert!(n >= 1, "encoding length must be at least 1");
        Self { bits: (0..n).map(|_| rng.gen::<bool>()).collect() }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor guarantees n ≥ 1
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    pub fn count_ones(&self) -> u64 {
        self.bits.iter().filter(|&&b| b).count() as u64
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    /// Number of positions where `self` and `other` differ.
    pub fn hamming_distance(&self, other: &BitString) -> usize {
        assert_eq!(self.len(), other.len(), "length mismatch in hamming_distance");
        self.bits.iter().zip(&other.bits).filter(|(a, b)| a != b).count()
    }

    /// Decodes the low `n` bits of `mask` (bit i of the mask becomes position i).
    pub fn from_mask(mask: u64, n: usize) -> Self {
        assert!(n >= 1 && n <= 64);
        Self { bits: (0..n).map(|i| mask >> i & 1 == 1).collect() }
    }
}

/// Returns a copy of `x` in which every bit was independently inverted with
/// probability `p`. One Bernoulli draw is consumed per position, in index
/// order, which pins the stream semantics for reproducibility.
pub fn flip_bits(x: &BitString, p: f64, rng: &mut RngStream) -> Result<BitString, BitStringError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(BitStringError::InvalidProbability(p));
    }
    let bits = x.bits.iter().map(|&b| b ^ rng.gen_bool(p)).collect();
    Ok(BitString { bits })
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = BitStringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(BitStringError::InvalidCharacter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(bits)
    }
}
