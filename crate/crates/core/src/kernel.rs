//! Kernel-code embedding and homomorphism redundancy.
//!
//! A VT word `y` becomes the kernel word `1 ‖ y ‖ p` of length `n + 1`, where
//! `p` makes the total weight even (the kernel of the coordinate-sum map into
//! Z2). Then `n - 1` redundancy bits are appended:
//!
//! ```text
//! r_i = g_{i+1}              1 <= i <= floor((n-1)/2)
//! r_i = g_1 + g_{i+1}        ceil((n+1)/2) <= i <= n-1
//! r_i = g_{i+1} + g_{n+1}    i = n/2, n even
//! ```
//!
//! Paired base-by-base with the first `n` bits, the first zone always yields
//! G/C, the second zone always A/T, and for even `n` exactly one of base 1
//! and base `n/2 + 1` is G/C.

use std::fmt;

use thiserror::Error;

use crate::bits::BitString;
use crate::params::CodeParams;
use crate::vt::VtWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("{what} length mismatch: expected {expected}, got {got}")]
    Length {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("kernel word must start with 1")]
    LeadingZero,
    #[error("kernel word has odd weight")]
    OddWeight,
    #[error("redundancy bits inconsistent at indices {0:?}")]
    Redundancy(Vec<usize>),
}

/// `g_1 .. g_{n+1}` with `g_1 = 1` and even weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelWord(BitString);

impl KernelWord {
    pub fn new(bits: BitString, params: &CodeParams) -> Result<Self, KernelError> {
        if bits.len() != params.n + 1 {
            return Err(KernelError::Length {
                what: "kernel word",
                expected: params.n + 1,
                got: bits.len(),
            });
        }
        if bits.get(1) != 1 {
            return Err(KernelError::LeadingZero);
        }
        if !bits.weight().is_multiple_of(2) {
            return Err(KernelError::OddWeight);
        }
        Ok(Self(bits))
    }

    pub fn bits(&self) -> &BitString {
        &self.0
    }
}

impl fmt::Display for KernelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A kernel word followed by its `n - 1` redundancy bits; `2n` bits total.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpandedWord(BitString);

impl ExpandedWord {
    /// Wraps `2n` raw bits without checking kernel or redundancy structure.
    pub fn from_raw(bits: BitString, params: &CodeParams) -> Result<Self, KernelError> {
        if bits.len() != 2 * params.n {
            return Err(KernelError::Length {
                what: "expanded word",
                expected: 2 * params.n,
                got: bits.len(),
            });
        }
        Ok(Self(bits))
    }

    /// Wraps `2n` bits, requiring a valid kernel part and consistent redundancy.
    pub fn new(bits: BitString, params: &CodeParams) -> Result<Self, KernelError> {
        let ew = Self::from_raw(bits, params)?;
        KernelWord::new(ew.kernel_bits(params), params)?;
        let bad = verify_redundancy(&ew, params);
        if !bad.is_empty() {
            return Err(KernelError::Redundancy(bad));
        }
        Ok(ew)
    }

    pub fn bits(&self) -> &BitString {
        &self.0
    }

    fn kernel_bits(&self, params: &CodeParams) -> BitString {
        self.0.iter().take(params.n + 1).collect()
    }
}

impl fmt::Display for ExpandedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn kernel_encode(word: &VtWord, params: &CodeParams) -> Result<KernelWord, KernelError> {
    let y = word.bits();
    if y.len() != params.m {
        return Err(KernelError::Length {
            what: "VT word",
            expected: params.m,
            got: y.len(),
        });
    }
    let mut bits = BitString::new();
    bits.push(1);
    bits.extend(y.iter());
    bits.push((bits.weight() % 2) as u8);
    Ok(KernelWord(bits))
}

/// Redundancy bit `r_i` (1-indexed) computed from kernel bits `g`.
fn redundancy_bit(g: &[u8], i: usize, n: usize) -> u8 {
    let g = |k: usize| g[k - 1];
    if i <= (n - 1) / 2 {
        g(i + 1)
    } else if n.is_multiple_of(2) && i == n / 2 {
        g(i + 1) ^ g(n + 1)
    } else {
        g(1) ^ g(i + 1)
    }
}

pub fn expand(kw: &KernelWord, params: &CodeParams) -> ExpandedWord {
    let n = params.n;
    let g = kw.bits().as_slice();
    let mut bits = kw.bits().clone();
    bits.extend((1..n).map(|i| redundancy_bit(g, i, n)));
    ExpandedWord(bits)
}

/// Indices `i` in `1..n` whose redundancy bit disagrees with the kernel part.
pub fn verify_redundancy(ew: &ExpandedWord, params: &CodeParams) -> Vec<usize> {
    let n = params.n;
    let bits = ew.bits().as_slice();
    let (g, r) = bits.split_at(n + 1);
    (1..n)
        .filter(|&i| r[i - 1] != redundancy_bit(g, i, n))
        .collect()
}

/// Whether the kernel part of `ew` has even weight.
pub fn kernel_parity_ok(ew: &ExpandedWord, params: &CodeParams) -> bool {
    ew.bits()
        .iter()
        .take(params.n + 1)
        .filter(|&b| b == 1)
        .count()
        % 2
        == 0
}

/// Recovers the VT word `g_2 .. g_n`.
pub fn strip(ew: &ExpandedWord, params: &CodeParams) -> VtWord {
    VtWord::new_unchecked(ew.bits().iter().skip(1).take(params.m).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::derive_params;

    fn b(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn kernel_encode_examples() {
        let p = derive_params(10).unwrap();
        let enc = |s: &str| {
            kernel_encode(&VtWord::new(b(s), &p).unwrap(), &p)
                .unwrap()
                .to_string()
        };
        assert_eq!(enc("111001100"), "11110011000");
        assert_eq!(enc("000000000"), "10000000001");
        assert_eq!(enc("001011111"), "10010111111");
    }

    #[test]
    fn expand_examples() {
        let p = derive_params(10).unwrap();
        let kw = KernelWord::new(b("11110011000"), &p).unwrap();
        assert_eq!(expand(&kw, &p).to_string(), "11110011000111000011");
        let kw = KernelWord::new(b("10000000001"), &p).unwrap();
        assert_eq!(expand(&kw, &p).to_string(), "10000000001000011111");

        let p7 = derive_params(7).unwrap();
        let kw = KernelWord::new(b("10000001"), &p7).unwrap();
        assert_eq!(expand(&kw, &p7).to_string(), "10000001000111");
    }

    #[test]
    fn kernel_word_validation() {
        let p = derive_params(10).unwrap();
        assert_eq!(
            KernelWord::new(b("01110011000"), &p),
            Err(KernelError::LeadingZero)
        );
        assert_eq!(
            KernelWord::new(b("11110011001"), &p),
            Err(KernelError::OddWeight)
        );
        assert!(matches!(
            KernelWord::new(b("1111001100"), &p),
            Err(KernelError::Length { .. })
        ));
    }

    #[test]
    fn redundancy_checks() {
        let p = derive_params(10).unwrap();
        let ew = ExpandedWord::new(b("11110011000111000011"), &p).unwrap();
        assert!(verify_redundancy(&ew, &p).is_empty());

        let mut flipped = ew.bits().clone();
        flipped.flip(12);
        let bad = ExpandedWord::from_raw(flipped.clone(), &p).unwrap();
        assert_eq!(verify_redundancy(&bad, &p), vec![1]);
        assert_eq!(
            ExpandedWord::new(flipped, &p),
            Err(KernelError::Redundancy(vec![1]))
        );

        let mut flipped = ew.bits().clone();
        flipped.flip(5);
        let bad = ExpandedWord::from_raw(flipped, &p).unwrap();
        assert_eq!(verify_redundancy(&bad, &p), vec![4]);
        assert!(!kernel_parity_ok(&bad, &p));
    }

    #[test]
    fn strip_examples() {
        let p = derive_params(10).unwrap();
        for (e, y) in [
            ("11110011000111000011", "111001100"),
            ("10000000001000011111", "000000000"),
        ] {
            let ew = ExpandedWord::new(b(e), &p).unwrap();
            assert_eq!(strip(&ew, &p).to_string(), y);
        }
        let y = VtWord::new(b("001011111"), &p).unwrap();
        let ew = expand(&kernel_encode(&y, &p).unwrap(), &p);
        assert_eq!(strip(&ew, &p), y);
    }

    #[test]
    fn exhaustive_structure_small_n() {
        use crate::vt::{vt_encode, Message};
        for n in 6..=12 {
            let p = derive_params(n).unwrap();
            for v in 0..p.code_size() {
                let y = vt_encode(&Message::from_u64(v, &p), &p).unwrap();
                let kw = kernel_encode(&y, &p).unwrap();
                assert_eq!(kw.bits().get(1), 1);
                assert_eq!(kw.bits().weight() % 2, 0);
                let ew = expand(&kw, &p);
                assert!(verify_redundancy(&ew, &p).is_empty());
                assert_eq!(strip(&ew, &p), y);
                if n % 2 == 0 {
                    // exactly one of base 1 and base n/2+1 pairs equal bits
                    let e = ew.bits();
                    let lead = e.get(1) == e.get(n + 1);
                    let mid = e.get(n / 2 + 1) == e.get(n + n / 2 + 1);
                    assert!(lead ^ mid, "n={n} v={v}");
                }
            }
        }
    }
}
