//! Varshamov–Tenengolts encoding and single-error decoding.
//!
//! Words have length `m` and checksum `sum(i * b_i) ≡ 0 (mod 2m + 1)`. With that
//! modulus a single deletion, insertion, or substitution is correctable; the
//! received length tells the decoder which of the three happened.

use std::fmt;

use thiserror::Error;

use crate::bits::BitString;
use crate::params::CodeParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VtError {
    #[error("{what} length mismatch: expected {expected}, got {got}")]
    Length {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("word is not a VT codeword (deficiency {0})")]
    NotCodeword(usize),
    #[error("deficiency {d} out of range [0, {max}]")]
    DeficiencyOutOfRange { d: usize, max: usize },
    #[error("uncorrectable substitution pattern (deficiency {0})")]
    UncorrectableSubstitution(usize),
    #[error("uncorrectable deletion pattern (deficiency {deficiency}, weight {weight})")]
    UncorrectableDeletion { deficiency: usize, weight: usize },
    #[error("uncorrectable insertion pattern (checksum {0})")]
    UncorrectableInsertion(usize),
}

/// A message block of exactly `l` bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Message(BitString);

impl Message {
    pub fn new(bits: BitString, params: &CodeParams) -> Result<Self, VtError> {
        if bits.len() != params.l {
            return Err(VtError::Length {
                what: "message",
                expected: params.l,
                got: bits.len(),
            });
        }
        Ok(Self(bits))
    }

    /// Message whose bits are the low `l` bits of `value`, MSB first.
    pub fn from_u64(value: u64, params: &CodeParams) -> Self {
        Self(BitString::from_u64(value, params.l))
    }

    pub fn bits(&self) -> &BitString {
        &self.0
    }

    pub fn into_bits(self) -> BitString {
        self.0
    }
}

impl fmt::Display for Message {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A valid VT codeword of length `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VtWord(BitString);

impl VtWord {
    pub fn new(bits: BitString, params: &CodeParams) -> Result<Self, VtError> {
        check_len("VT word", params.m, bits.len())?;
        let d = deficiency(&bits, params.vt_modulus);
        if d.0 != 0 {
            return Err(VtError::NotCodeword(d.0));
        }
        Ok(Self(bits))
    }

    pub(crate) fn new_unchecked(bits: BitString) -> Self {
        Self(bits)
    }

    pub fn bits(&self) -> &BitString {
        &self.0
    }

    pub fn into_bits(self) -> BitString {
        self.0
    }
}

impl fmt::Display for VtWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Amount that must be added to the checksum to reach 0, i.e.
/// `(-weighted_sum) mod modulus`. Zero exactly for codewords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Deficiency(pub usize);

/// What a decoder changed to reach a codeword. Positions are 1-indexed in the
/// corrected word for deletions and substitutions, and in the received word
/// for insertions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VtCorrection {
    None,
    Substitution { position: usize, bit: u8 },
    Deletion { position: usize, bit: u8 },
    Insertion { position: usize, bit: u8 },
}

fn check_len(what: &'static str, expected: usize, got: usize) -> Result<(), VtError> {
    if expected == got {
        Ok(())
    } else {
        Err(VtError::Length {
            what,
            expected,
            got,
        })
    }
}

/// `sum(i * b_i) mod modulus` with 1-indexed positions.
pub fn weighted_sum(bits: &BitString, modulus: usize) -> usize {
    bits.iter()
        .enumerate()
        .filter(|&(_, b)| b == 1)
        .fold(0usize, |acc, (i, _)| (acc + (i + 1) % modulus) % modulus)
}

pub fn deficiency(bits: &BitString, modulus: usize) -> Deficiency {
    Deficiency((modulus - weighted_sum(bits, modulus)) % modulus)
}

/// Picks parity positions summing to `d`.
///
/// When `d` exceeds what the power-of-two positions can reach, the extra
/// position is taken first; the rest is the binary expansion over the powers.
pub fn partition_deficiency(d: usize, params: &CodeParams) -> Result<Vec<usize>, VtError> {
    let max = 2 * params.m;
    if d > max {
        return Err(VtError::DeficiencyOutOfRange { d, max });
    }
    let mut chosen = Vec::new();
    let mut rest = d;
    if rest > params.power_sum() {
        let extra = params.extra_parity();
        chosen.push(extra);
        rest -= extra;
    }
    chosen.extend(
        params
            .parity_positions
            .iter()
            .copied()
            .filter(|p| p.is_power_of_two() && rest & p != 0),
    );
    chosen.sort_unstable();
    debug_assert_eq!(chosen.iter().sum::<usize>(), d);
    Ok(chosen)
}

pub fn vt_encode(message: &Message, params: &CodeParams) -> Result<VtWord, VtError> {
    check_len("message", params.l, message.bits().len())?;
    let mut word = BitString::zeros(params.m);
    for (&pos, bit) in params.message_positions.iter().zip(message.bits().iter()) {
        word.set(pos, bit);
    }
    let d = deficiency(&word, params.vt_modulus).0;
    for pos in partition_deficiency(d, params)? {
        word.set(pos, 1);
    }
    debug_assert_eq!(weighted_sum(&word, params.vt_modulus), 0);
    Ok(VtWord(word))
}

/// Corrects at most one flipped bit in a length-`m` word.
pub fn vt_decode_substitution(
    bits: &BitString,
    params: &CodeParams,
) -> Result<(VtWord, VtCorrection), VtError> {
    check_len("received VT word", params.m, bits.len())?;
    let d = deficiency(bits, params.vt_modulus).0;
    if d == 0 {
        return Ok((VtWord(bits.clone()), VtCorrection::None));
    }
    // A 1 lost at position p leaves deficiency p; a spurious 1 at p leaves 2m+1-p.
    let (position, expected, bit) = if d <= params.m {
        (d, 0, 1)
    } else {
        (params.vt_modulus - d, 1, 0)
    };
    if bits.get(position) != expected {
        return Err(VtError::UncorrectableSubstitution(d));
    }
    let mut word = bits.clone();
    word.set(position, bit);
    Ok((VtWord(word), VtCorrection::Substitution { position, bit }))
}

/// Restores one deleted bit in a length-`m - 1` word.
pub fn vt_decode_deletion(
    bits: &BitString,
    params: &CodeParams,
) -> Result<(VtWord, VtCorrection), VtError> {
    check_len("received VT word", params.m - 1, bits.len())?;
    let d = deficiency(bits, params.vt_modulus).0;
    let w = bits.weight();
    let len = bits.len();

    let (index, bit) = if d <= w {
        // A 0 was deleted: put it where exactly d ones follow. Take the
        // rightmost such slot; every slot in that zero run gives the same word.
        let mut ones_right = 0;
        let mut k = len;
        while ones_right < d {
            k -= 1;
            ones_right += usize::from(bits.as_slice()[k]);
        }
        (k, 0)
    } else {
        // A 1 was deleted: put it after exactly d - w - 1 zeros.
        let target = d - w - 1;
        let mut zeros_left = 0;
        let mut k = 0;
        while zeros_left < target {
            if k == len {
                return Err(VtError::UncorrectableDeletion {
                    deficiency: d,
                    weight: w,
                });
            }
            zeros_left += usize::from(bits.as_slice()[k] == 0);
            k += 1;
        }
        (k, 1)
    };

    let mut word = bits.clone();
    word.insert(index + 1, bit);
    debug_assert_eq!(weighted_sum(&word, params.vt_modulus), 0);
    Ok((
        VtWord(word),
        VtCorrection::Deletion {
            position: index + 1,
            bit,
        },
    ))
}

/// Removes one inserted bit from a length-`m + 1` word.
pub fn vt_decode_insertion(
    bits: &BitString,
    params: &CodeParams,
) -> Result<(VtWord, VtCorrection), VtError> {
    check_len("received VT word", params.m + 1, bits.len())?;
    let e = weighted_sum(bits, params.vt_modulus);
    let slice = bits.as_slice();

    // ones_right[i] = ones strictly right of 0-indexed i
    let mut ones_right = vec![0usize; slice.len()];
    let mut acc = 0;
    for i in (0..slice.len()).rev() {
        ones_right[i] = acc;
        acc += usize::from(slice[i]);
    }

    let zero = (0..slice.len()).find(|&i| slice[i] == 0 && ones_right[i] == e);
    let pick = zero.map(|i| (i, 0)).or_else(|| {
        (0..slice.len())
            .find(|&i| slice[i] == 1 && i + 1 + ones_right[i] == e)
            .map(|i| (i, 1))
    });
    let Some((index, bit)) = pick else {
        return Err(VtError::UncorrectableInsertion(e));
    };

    let mut word = bits.clone();
    word.remove(index + 1);
    if weighted_sum(&word, params.vt_modulus) != 0 {
        return Err(VtError::UncorrectableInsertion(e));
    }
    Ok((
        VtWord(word),
        VtCorrection::Insertion {
            position: index + 1,
            bit,
        },
    ))
}

/// Dispatches on length: `m - 1` deletion, `m` substitution, `m + 1` insertion.
pub fn vt_decode(bits: &BitString, params: &CodeParams) -> Result<(VtWord, VtCorrection), VtError> {
    match bits.len() {
        len if len + 1 == params.m => vt_decode_deletion(bits, params),
        len if len == params.m => vt_decode_substitution(bits, params),
        len if len == params.m + 1 => vt_decode_insertion(bits, params),
        got => Err(VtError::Length {
            what: "received VT word",
            expected: params.m,
            got,
        }),
    }
}

pub fn extract_message(word: &VtWord, params: &CodeParams) -> Message {
    Message(
        params
            .message_positions
            .iter()
            .map(|&p| word.bits().get(p))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::derive_params;

    fn b(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn p10() -> CodeParams {
        derive_params(10).unwrap()
    }

    #[test]
    fn weighted_sums() {
        assert_eq!(weighted_sum(&b("001001100"), 19), 16);
        assert_eq!(deficiency(&b("001001100"), 19), Deficiency(3));
        assert_eq!(weighted_sum(&b("111001100"), 19), 0);
        assert_eq!(weighted_sum(&b("000000000"), 19), 0);
    }

    #[test]
    fn partitions() {
        let p = p10();
        assert_eq!(partition_deficiency(3, &p).unwrap(), vec![1, 2]);
        assert_eq!(partition_deficiency(0, &p).unwrap(), Vec::<usize>::new());
        assert_eq!(partition_deficiency(17, &p).unwrap(), vec![8, 9]);
        assert!(partition_deficiency(19, &p).is_err());
        for d in 0..=18 {
            let s = partition_deficiency(d, &p).unwrap();
            assert_eq!(s.iter().sum::<usize>(), d);
            assert!(s.iter().all(|x| p.is_parity_position(*x)));
        }
    }

    #[test]
    fn encode_examples() {
        let p = p10();
        let enc = |s: &str| {
            vt_encode(&Message::new(b(s), &p).unwrap(), &p)
                .unwrap()
                .to_string()
        };
        assert_eq!(enc("1011"), "111001100");
        assert_eq!(enc("0000"), "000000000");
        assert_eq!(enc("1111"), "001011111");
        assert!(Message::new(b("101"), &p).is_err());
    }

    #[test]
    fn extract_examples() {
        let p = p10();
        for (w, m) in [
            ("111001100", "1011"),
            ("000000000", "0000"),
            ("001011111", "1111"),
        ] {
            let word = VtWord::new(b(w), &p).unwrap();
            assert_eq!(extract_message(&word, &p).to_string(), m);
        }
        assert_eq!(
            VtWord::new(b("110100110"), &p),
            Err(VtError::NotCodeword(16))
        );
    }

    #[test]
    fn substitution_examples() {
        let p = p10();
        let dec = |s: &str| vt_decode_substitution(&b(s), &p).unwrap();
        assert_eq!(
            dec("111001100"),
            (VtWord(b("111001100")), VtCorrection::None)
        );
        assert_eq!(
            dec("110001100"),
            (
                VtWord(b("111001100")),
                VtCorrection::Substitution {
                    position: 3,
                    bit: 1
                }
            )
        );
        assert_eq!(
            dec("111101100"),
            (
                VtWord(b("111001100")),
                VtCorrection::Substitution {
                    position: 4,
                    bit: 0
                }
            )
        );
        // two flips: deficiency 3 points at a position already holding 1
        assert_eq!(
            vt_decode_substitution(&b("111001111"), &p),
            Err(VtError::UncorrectableSubstitution(2))
        );
    }

    #[test]
    fn deletion_examples() {
        let p = p10();
        let dec = |s: &str| vt_decode_deletion(&b(s), &p).unwrap().0.to_string();
        assert_eq!(dec("11001100"), "111001100");
        assert_eq!(dec("00000000"), "000000000");
        // 001011111 with position 4 deleted
        assert_eq!(dec("00111111"), "001011111");
        // not a deletion of a codeword; the rule still lands on a codeword
        assert_eq!(dec("10100110"), "101000110");
        assert!(vt_decode_deletion(&b("111001100"), &p).is_err());
    }

    #[test]
    fn deletion_reports_threshold() {
        let p = p10();
        let (_, c) = vt_decode_deletion(&b("11001100"), &p).unwrap();
        assert_eq!(
            c,
            VtCorrection::Deletion {
                position: 1,
                bit: 1
            }
        );
    }

    #[test]
    fn insertion_examples() {
        let p = p10();
        let dec = |s: &str| vt_decode_insertion(&b(s), &p).unwrap();
        assert_eq!(dec("1110011000").0.to_string(), "111001100");
        assert_eq!(
            dec("0111001100"),
            (
                VtWord(b("111001100")),
                VtCorrection::Insertion {
                    position: 1,
                    bit: 0
                }
            )
        );
        assert_eq!(
            dec("1111001100"),
            (
                VtWord(b("111001100")),
                VtCorrection::Insertion {
                    position: 1,
                    bit: 1
                }
            )
        );
    }

    #[test]
    fn dispatch_rejects_far_lengths() {
        let p = p10();
        assert!(matches!(
            vt_decode(&b("1100110"), &p),
            Err(VtError::Length { .. })
        ));
        assert!(vt_decode(&b("11001100"), &p).is_ok());
    }

    #[test]
    fn exhaustive_single_errors_small_n() {
        for n in 6..=12 {
            let p = derive_params(n).unwrap();
            for v in 0..p.code_size() {
                let msg = Message::from_u64(v, &p);
                let cw = vt_encode(&msg, &p).unwrap();
                assert_eq!(extract_message(&cw, &p), msg);
                for pos in 1..=p.m {
                    let mut del = cw.bits().clone();
                    let bit = del.remove(pos);
                    let d = deficiency(&del, p.vt_modulus).0;
                    assert_eq!(d <= del.weight(), bit == 0, "threshold n={n} pos={pos}");
                    assert_eq!(vt_decode_deletion(&del, &p).unwrap().0, cw);

                    let mut sub = cw.bits().clone();
                    sub.flip(pos);
                    assert_eq!(vt_decode_substitution(&sub, &p).unwrap().0, cw);
                }
                for pos in 1..=p.m + 1 {
                    for bit in [0, 1] {
                        let mut ins = cw.bits().clone();
                        ins.insert(pos, bit);
                        assert_eq!(vt_decode_insertion(&ins, &p).unwrap().0, cw);
                    }
                }
            }
        }
    }
}
