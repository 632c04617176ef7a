//! Bits to bases and back, plus the usual strand primitives.
//!
//! Base `j` of a strand carries the bit pair `(b_j, b_{j+n})` of a `2n`-bit
//! expanded word: `00 → C`, `01 → A`, `10 → T`, `11 → G`. G and C are exactly
//! the pairs with equal bits.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BitString;
use crate::kernel::ExpandedWord;
use crate::params::CodeParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DnaError {
    #[error("invalid base {ch:?} at position {position}")]
    Alphabet { ch: char, position: usize },
    #[error("strand length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("expected a strand of length {expected}, got {got}")]
    Length { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Base {
    A,
    C,
    G,
    T,
}

impl Base {
    pub const ALL: [Base; 4] = [Base::A, Base::C, Base::G, Base::T];

    pub fn from_pair(first: u8, second: u8) -> Self {
        match (first, second) {
            (0, 0) => Base::C,
            (0, _) => Base::A,
            (_, 0) => Base::T,
            _ => Base::G,
        }
    }

    pub fn to_pair(self) -> (u8, u8) {
        match self {
            Base::C => (0, 0),
            Base::A => (0, 1),
            Base::T => (1, 0),
            Base::G => (1, 1),
        }
    }

    /// First bit of the pair code: 1 for G and T.
    pub fn first_bit(self) -> u8 {
        self.to_pair().0
    }

    pub fn complement(self) -> Self {
        match self {
            Base::A => Base::T,
            Base::T => Base::A,
            Base::C => Base::G,
            Base::G => Base::C,
        }
    }

    pub fn is_gc(self) -> bool {
        matches!(self, Base::G | Base::C)
    }

    pub fn as_char(self) -> char {
        match self {
            Base::A => 'A',
            Base::C => 'C',
            Base::G => 'G',
            Base::T => 'T',
        }
    }

    pub fn from_char(ch: char) -> Option<Self> {
        match ch {
            'A' => Some(Base::A),
            'C' => Some(Base::C),
            'G' => Some(Base::G),
            'T' => Some(Base::T),
            _ => None,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A base sequence. Encoded strands have length `n`; received ones may not.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Strand(Vec<Base>);

impl Strand {
    pub fn new(bases: Vec<Base>) -> Self {
        Self(bases)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bases(&self) -> &[Base] {
        &self.0
    }

    pub fn bases_mut(&mut self) -> &mut Vec<Base> {
        &mut self.0
    }

    /// Base at 1-indexed `pos`.
    pub fn get(&self, pos: usize) -> Base {
        self.0[pos - 1]
    }

    pub fn reverse(&self) -> Strand {
        Strand(self.0.iter().rev().copied().collect())
    }

    pub fn reverse_complement(&self) -> Strand {
        Strand(self.0.iter().rev().map(|b| b.complement()).collect())
    }

    pub fn gc_weight(&self) -> usize {
        gc_weight(self)
    }
}

impl FromStr for Strand {
    type Err = DnaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(i, ch)| {
                Base::from_char(ch).ok_or(DnaError::Alphabet {
                    ch,
                    position: i + 1,
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Strand)
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|b| b.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromIterator<Base> for Strand {
    fn from_iter<I: IntoIterator<Item = Base>>(iter: I) -> Self {
        Strand(iter.into_iter().collect())
    }
}

pub fn to_strand(ew: &ExpandedWord) -> Strand {
    let bits = ew.bits().as_slice();
    let n = bits.len() / 2;
    (0..n)
        .map(|j| Base::from_pair(bits[j], bits[j + n]))
        .collect()
}

pub fn from_strand(s: &Strand, params: &CodeParams) -> Result<ExpandedWord, DnaError> {
    if s.len() != params.n {
        return Err(DnaError::Length {
            expected: params.n,
            got: s.len(),
        });
    }
    let (first, second): (Vec<u8>, Vec<u8>) = s.bases().iter().map(|b| b.to_pair()).unzip();
    let bits: BitString = first.into_iter().chain(second).collect();
    Ok(ExpandedWord::from_raw(bits, params).expect("length checked above"))
}

/// First pair bit of every base: G and T give 1, A and C give 0.
pub fn first_bits(s: &Strand) -> BitString {
    s.bases().iter().map(|b| b.first_bit()).collect()
}

pub fn reverse(s: &Strand) -> Strand {
    s.reverse()
}

pub fn reverse_complement(s: &Strand) -> Strand {
    s.reverse_complement()
}

pub fn hamming(x: &Strand, y: &Strand) -> Result<usize, DnaError> {
    if x.len() != y.len() {
        return Err(DnaError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(hamming_slices(x.bases(), y.bases()))
}

/// Positions past the shorter slice are ignored.
pub(crate) fn hamming_slices(x: &[Base], y: &[Base]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

pub fn gc_weight(s: &Strand) -> usize {
    s.bases().iter().filter(|b| b.is_gc()).count()
}
