//! Byte streams to strand archives and back.
//!
//! The payload is read MSB-first, cut into `l`-bit blocks (the last one
//! zero-padded) and each block becomes one strand. The archive text format is
//!
//! ```text
//! DNAARC 1 n=<n> bits=<payload_bits>
//! <strand>
//! <strand>
//! ...
//! ```
//!
//! with LF line endings. Lines starting with `#` and blank lines are ignored
//! when reading.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::bits::BitString;
use crate::codec::{decode_strand, encode_strand, CodecError, DecodeReport};
use crate::dnamap::{DnaError, Strand};
use crate::params::{derive_params, CodeParams, ParamsError};
use crate::vt::Message;

const MAGIC: &str = "DNAARC";
const VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FramingError {
    #[error("bad archive header: {0}")]
    Header(String),
    #[error("line {line}: {source}")]
    Strand {
        line: usize,
        #[source]
        source: DnaError,
    },
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error("archive strand length n={archive} does not match n={expected}")]
    ParamsMismatch { archive: usize, expected: usize },
    #[error("archive holds {got} strands, {expected} needed for {bits} payload bits")]
    StrandCount {
        got: usize,
        expected: u64,
        bits: u64,
    },
    #[error("strand {index}: {source}")]
    Decode {
        index: usize,
        #[source]
        source: CodecError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandArchive {
    pub n: usize,
    pub payload_bits: u64,
    pub strands: Vec<Strand>,
}

impl StrandArchive {
    pub fn params(&self) -> Result<CodeParams, ParamsError> {
        derive_params(self.n)
    }

    /// Number of strands a payload of `payload_bits` needs at message length `l`.
    pub fn expected_strands(payload_bits: u64, l: usize) -> u64 {
        payload_bits.div_ceil(l as u64)
    }
}

impl fmt::Display for StrandArchive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{MAGIC} {VERSION} n={} bits={}",
            self.n, self.payload_bits
        )?;
        for s in &self.strands {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

fn parse_header(line: &str) -> Result<(usize, u64), FramingError> {
    let bad = |why: &str| FramingError::Header(format!("{why}: {line:?}"));
    let fields: Vec<&str> = line.split(' ').collect();
    let [magic, version, n, bits] = fields[..] else {
        return Err(bad("expected 4 fields"));
    };
    if magic != MAGIC {
        return Err(bad("missing DNAARC magic"));
    }
    if version != VERSION {
        return Err(bad("unsupported version"));
    }
    let n = n
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| bad("bad n field"))?;
    let bits = bits
        .strip_prefix("bits=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| bad("bad bits field"))?;
    Ok((n, bits))
}

impl FromStr for StrandArchive {
    type Err = FramingError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .split('\n')
            .enumerate()
            .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines
            .next()
            .ok_or_else(|| FramingError::Header("empty archive".into()))?;
        let (n, payload_bits) = parse_header(header)?;
        let strands = lines
            .map(|(line, l)| {
                l.parse::<Strand>()
                    .map_err(|source| FramingError::Strand { line, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            n,
            payload_bits,
            strands,
        })
    }
}

fn payload_bits_iter(payload: &[u8]) -> impl Iterator<Item = u8> + '_ {
    payload
        .iter()
        .flat_map(|byte| (0..8).rev().map(move |k| (byte >> k) & 1))
}

pub fn encode_stream(payload: &[u8], params: &CodeParams) -> StrandArchive {
    let bits: Vec<u8> = payload_bits_iter(payload).collect();
    let strands = bits
        .par_chunks(params.l)
        .map(|chunk| {
            let mut block = BitString::from_bits(chunk.iter().copied());
            block.extend(std::iter::repeat_n(0, params.l - chunk.len()));
            let msg = Message::new(block, params).expect("block padded to l");
            encode_strand(&msg, params).expect("message has length l")
        })
        .collect();
    StrandArchive {
        n: params.n,
        payload_bits: bits.len() as u64,
        strands,
    }
}

/// Decoded payload plus one outcome per strand, in archive order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamDecode {
    pub payload: Vec<u8>,
    pub reports: Vec<Result<DecodeReport, CodecError>>,
}

impl StreamDecode {
    pub fn failures(&self) -> impl Iterator<Item = (usize, &CodecError)> {
        self.reports
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().err().map(|e| (i, e)))
    }
}

/// Decodes every strand and reassembles the payload.
///
/// Without `force`, the first uncorrectable strand aborts with its index.
/// With `force`, failed blocks decode as zeros and the failures stay in
/// `reports`.
pub fn decode_stream(
    archive: &StrandArchive,
    params: &CodeParams,
    force: bool,
) -> Result<StreamDecode, FramingError> {
    if archive.n != params.n {
        return Err(FramingError::ParamsMismatch {
            archive: archive.n,
            expected: params.n,
        });
    }
    if !archive.payload_bits.is_multiple_of(8) {
        return Err(FramingError::Header(format!(
            "bits={} is not a whole number of bytes",
            archive.payload_bits
        )));
    }
    let expected = StrandArchive::expected_strands(archive.payload_bits, params.l);
    if archive.strands.len() as u64 != expected {
        return Err(FramingError::StrandCount {
            got: archive.strands.len(),
            expected,
            bits: archive.payload_bits,
        });
    }

    let decoded: Vec<Result<(Message, DecodeReport), CodecError>> = archive
        .strands
        .par_iter()
        .map(|s| decode_strand(s, params))
        .collect();

    if !force {
        if let Some((index, Err(e))) = decoded.iter().enumerate().find(|(_, r)| r.is_err()) {
            return Err(FramingError::Decode {
                index,
                source: e.clone(),
            });
        }
    }

    let mut bits: Vec<u8> = Vec::with_capacity(decoded.len() * params.l);
    let mut reports = Vec::with_capacity(decoded.len());
    for r in decoded {
        match r {
            Ok((msg, report)) => {
                bits.extend(msg.bits().iter());
                reports.push(Ok(report));
            }
            Err(e) => {
                bits.extend(std::iter::repeat_n(0, params.l));
                reports.push(Err(e));
            }
        }
    }
    bits.truncate(archive.payload_bits as usize);
    let payload = bits
        .chunks(8)
        .map(|c| c.iter().fold(0u8, |acc, &b| (acc << 1) | b))
        .collect();
    Ok(StreamDecode { payload, reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::ErrorKind;

    fn p10() -> CodeParams {
        derive_params(10).unwrap()
    }

    #[test]
    fn empty_payload() {
        let a = encode_stream(&[], &p10());
        assert_eq!(a.payload_bits, 0);
        assert!(a.strands.is_empty());
        assert_eq!(a.to_string(), "DNAARC 1 n=10 bits=0\n");
        assert_eq!(
            decode_stream(&a, &p10(), false).unwrap().payload,
            Vec::<u8>::new()
        );
    }

    #[test]
    fn single_byte_example() {
        let a = encode_stream(&[0xB0], &p10());
        assert_eq!(a.payload_bits, 8);
        let strands: Vec<String> = a.strands.iter().map(ToString::to_string).collect();
        assert_eq!(strands, vec!["TGGGCCTTAA", "GCCCCAAAAA"]);
        assert_eq!(
            a.to_string(),
            "DNAARC 1 n=10 bits=8\nTGGGCCTTAA\nGCCCCAAAAA\n"
        );
        assert_eq!(
            decode_stream(&a, &p10(), false).unwrap().payload,
            vec![0xB0]
        );
    }

    #[test]
    fn kib_payload_arithmetic() {
        let payload: Vec<u8> = (0..1024u32).map(|i| (i * 37 % 251) as u8).collect();
        let a = encode_stream(&payload, &p10());
        assert_eq!(a.strands.len(), 2048);
        assert_eq!(a.payload_bits, 8192);
    }

    #[test]
    fn deletion_corrupted_strand() {
        let mut a = encode_stream(&[0xB0], &p10());
        a.strands[0] = "TGGCCTTAA".parse().unwrap();
        let out = decode_stream(&a, &p10(), false).unwrap();
        assert_eq!(out.payload, vec![0xB0]);
        assert_eq!(
            out.reports[0].as_ref().unwrap().corrected_error,
            ErrorKind::Deletion
        );
        assert_eq!(
            out.reports[1].as_ref().unwrap().corrected_error,
            ErrorKind::None
        );
    }

    #[test]
    fn length_gate_names_strand() {
        let mut a = encode_stream(&[0xB0], &p10());
        a.strands[1] = "GCCCCAAA".parse().unwrap();
        match decode_stream(&a, &p10(), false) {
            Err(FramingError::Decode {
                index: 1,
                source: CodecError::UncorrectableLength { got: 8, n: 10 },
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let forced = decode_stream(&a, &p10(), true).unwrap();
        assert_eq!(forced.payload, vec![0xB0]);
        assert_eq!(
            forced.failures().map(|(i, _)| i).collect::<Vec<_>>(),
            vec![1]
        );
    }

    #[test]
    fn archive_parsing() {
        let text = "# comment\nDNAARC 1 n=10 bits=8\nTGGGCCTTAA\n# mid\n\nGCCCCAAAAA";
        let a: StrandArchive = text.parse().unwrap();
        assert_eq!(a.n, 10);
        assert_eq!(a.payload_bits, 8);
        assert_eq!(a.strands.len(), 2);

        assert!(matches!(
            "DNAARC 2 n=10 bits=8\n".parse::<StrandArchive>(),
            Err(FramingError::Header(_))
        ));
        assert!(matches!(
            "DNAARC 1 n=10\n".parse::<StrandArchive>(),
            Err(FramingError::Header(_))
        ));
        assert!(matches!(
            "".parse::<StrandArchive>(),
            Err(FramingError::Header(_))
        ));
        assert!(matches!(
            "DNAARC 1 n=10 bits=8\nTGGGXCTTAA\n".parse::<StrandArchive>(),
            Err(FramingError::Strand { line: 2, .. })
        ));
    }

    #[test]
    fn decode_validates_shape() {
        let a = encode_stream(&[0xB0], &p10());
        assert!(matches!(
            decode_stream(&a, &derive_params(11).unwrap(), false),
            Err(FramingError::ParamsMismatch { .. })
        ));
        let mut short = a.clone();
        short.strands.pop();
        assert!(matches!(
            decode_stream(&short, &p10(), false),
            Err(FramingError::StrandCount { .. })
        ));
        let mut odd = a;
        odd.payload_bits = 7;
        assert!(matches!(
            decode_stream(&odd, &p10(), false),
            Err(FramingError::Header(_))
        ));
    }
}
