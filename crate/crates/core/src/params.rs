//! Code constants derived from the strand length.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Smallest strand length whose message length is nonzero.
pub const MIN_STRAND_LEN: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error(
        "strand length too short for nonzero message length: n={0}, need n >= {MIN_STRAND_LEN}"
    )]
    TooShort(usize),
}

/// Every constant the codec needs for strands of `n` bases.
///
/// The VT word has `m = n - 1` bits and is checked modulo `2m + 1`. Parity
/// positions are the powers of two up to `m` plus one extra position: `m`
/// itself, or `m - 1` when `m` is a power of two. That set can express every
/// deficiency in `[0, 2m]` as a subset sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub m: usize,
    pub vt_modulus: usize,
    pub parity_positions: Vec<usize>,
    pub l: usize,
    pub message_positions: Vec<usize>,
}

impl CodeParams {
    pub fn new(n: usize) -> Result<Self, ParamsError> {
        derive_params(n)
    }

    /// The non-power-of-two parity position.
    pub fn extra_parity(&self) -> usize {
        *self
            .parity_positions
            .iter()
            .find(|p| !p.is_power_of_two())
            .expect("parity set always holds one non-power position")
    }

    /// Sum of the power-of-two parity positions.
    pub fn power_sum(&self) -> usize {
        self.parity_positions
            .iter()
            .filter(|p| p.is_power_of_two())
            .sum()
    }

    /// Number of distinct messages, `2^l`, saturating at `u64::MAX`.
    pub fn code_size(&self) -> u64 {
        1u64.checked_shl(self.l as u32).unwrap_or(u64::MAX)
    }

    pub fn is_parity_position(&self, pos: usize) -> bool {
        self.parity_positions.binary_search(&pos).is_ok()
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "m={}", self.m)?;
        writeln!(f, "vt_modulus={}", self.vt_modulus)?;
        writeln!(f, "parity_positions={}", join(&self.parity_positions))?;
        writeln!(f, "l={}", self.l)?;
        write!(f, "message_positions={}", join(&self.message_positions))
    }
}

/// `ceil(log2(x))` for `x >= 1`.
pub(crate) fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

pub fn derive_params(n: usize) -> Result<CodeParams, ParamsError> {
    if n < MIN_STRAND_LEN {
        return Err(ParamsError::TooShort(n));
    }
    let m = n - 1;
    let mut parity: Vec<usize> = std::iter::successors(Some(1usize), |p| p.checked_mul(2))
        .take_while(|&p| p <= m)
        .collect();
    parity.push(if m.is_power_of_two() { m - 1 } else { m });
    parity.sort_unstable();

    let message_positions: Vec<usize> = (1..=m)
        .filter(|p| parity.binary_search(p).is_err())
        .collect();
    let l = message_positions.len();
    debug_assert_eq!(l, n - ceil_log2(2 * n - 1) - 1);

    Ok(CodeParams {
        n,
        m,
        vt_modulus: 2 * m + 1,
        parity_positions: parity,
        l,
        message_positions,
    })
}
