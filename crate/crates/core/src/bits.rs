//! Bit strings with 1-indexed position semantics.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid bit character {ch:?} at offset {offset}")]
pub struct ParseBitsError {
    pub ch: char,
    pub offset: usize,
}

/// An ordered sequence of bits. Each element is 0 or 1.
///
/// Positions in the coding literature are 1-indexed; [`BitString::get`] follows
/// that convention while slices and iterators stay 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BitString(Vec<u8>);

impl BitString {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![0; len])
    }

    /// Builds a bit string from arbitrary bytes, treating any nonzero value as 1.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Self {
        Self(bits.into_iter().map(|b| u8::from(b != 0)).collect())
    }

    /// The low `len` bits of `value`, most significant first.
    pub fn from_u64(value: u64, len: usize) -> Self {
        Self((0..len).rev().map(|k| ((value >> k) & 1) as u8).collect())
    }

    pub fn to_u64(&self) -> u64 {
        self.0
            .iter()
            .fold(0u64, |acc, &b| (acc << 1) | u64::from(b))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit at 1-indexed `pos`.
    pub fn get(&self, pos: usize) -> u8 {
        self.0[pos - 1]
    }

    /// Sets the bit at 1-indexed `pos`.
    pub fn set(&mut self, pos: usize, bit: u8) {
        self.0[pos - 1] = u8::from(bit != 0);
    }

    pub fn flip(&mut self, pos: usize) {
        self.0[pos - 1] ^= 1;
    }

    /// Inserts `bit` so that it ends up at 1-indexed `pos`.
    pub fn insert(&mut self, pos: usize, bit: u8) {
        self.0.insert(pos - 1, u8::from(bit != 0));
    }

    /// Removes and returns the bit at 1-indexed `pos`.
    pub fn remove(&mut self, pos: usize) -> u8 {
        self.0.remove(pos - 1)
    }

    pub fn push(&mut self, bit: u8) {
        self.0.push(u8::from(bit != 0));
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().copied()
    }

    pub fn into_inner(self) -> Vec<u8> {
        self.0
    }
}

impl From<Vec<u8>> for BitString {
    fn from(v: Vec<u8>) -> Self {
        Self::from_bits(v)
    }
}

impl FromIterator<u8> for BitString {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        Self::from_bits(iter)
    }
}

impl Extend<u8> for BitString {
    fn extend<I: IntoIterator<Item = u8>>(&mut self, iter: I) {
        self.0.extend(iter.into_iter().map(|b| u8::from(b != 0)));
    }
}

impl FromStr for BitString {
    type Err = ParseBitsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(offset, ch)| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(ParseBitsError { ch, offset }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let b: BitString = "1011".parse().unwrap();
        assert_eq!(b.as_slice(), &[1, 0, 1, 1]);
        assert_eq!(b.to_string(), "1011");
        assert_eq!(b.get(1), 1);
        assert_eq!(b.get(2), 0);
        assert!("10x1".parse::<BitString>().is_err());
    }

    #[test]
    fn u64_conversion_is_msb_first() {
        assert_eq!(BitString::from_u64(0b1011, 4).to_string(), "1011");
        assert_eq!(BitString::from_u64(1, 6).to_string(), "000001");
        assert_eq!("1011".parse::<BitString>().unwrap().to_u64(), 11);
    }

    #[test]
    fn one_indexed_edits() {
        let mut b: BitString = "000".parse().unwrap();
        b.insert(1, 1);
        assert_eq!(b.to_string(), "1000");
        b.insert(5, 1);
        assert_eq!(b.to_string(), "10001");
        assert_eq!(b.remove(1), 1);
        b.flip(2);
        assert_eq!(b.to_string(), "0101");
        assert_eq!(b.weight(), 2);
    }
}
