//! Message ↔ strand pipeline.
//!
//! Encoding chains VT encoding, kernel embedding, redundancy expansion and the
//! pair-to-base map. Decoding reads the first pair bit of every received base,
//! drops the leading one (it is always `g_1 = 1` and carries nothing), and hands
//! the rest to the VT decoder. A deletion or insertion at base 1 turns into a
//! position-1 edit of the VT word, so no special casing is needed.

use std::fmt;

use thiserror::Error;

use crate::dnamap::{first_bits, from_strand, to_strand, Strand};
use crate::kernel::{expand, kernel_encode, kernel_parity_ok, verify_redundancy};
use crate::params::CodeParams;
use crate::vt::{extract_message, vt_decode, vt_encode, Message, VtCorrection, VtError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("uncorrectable length: got {got} bases, expected {n} +/- 1")]
    UncorrectableLength { got: usize, n: usize },
    #[error("uncorrectable strand: {source}")]
    Uncorrectable {
        #[source]
        source: VtError,
        report: Box<DecodeReport>,
    },
    #[error(transparent)]
    Message(#[from] VtError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ErrorKind {
    #[default]
    None,
    Deletion,
    Insertion,
    Substitution,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::None => "none",
            ErrorKind::Deletion => "deletion",
            ErrorKind::Insertion => "insertion",
            ErrorKind::Substitution => "substitution",
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What the decoder saw and did for one strand.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DecodeReport {
    pub received_len: usize,
    pub corrected_error: ErrorKind,
    /// VT-level correction, positions relative to the VT word.
    pub detail: Option<VtCorrection>,
    /// Redundancy indices that disagree with the kernel part (length-n strands only).
    pub redundancy_violations: Vec<usize>,
    pub warnings: Vec<String>,
}

impl fmt::Display for DecodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "len={} corrected={}",
            self.received_len, self.corrected_error
        )?;
        if let Some(
            VtCorrection::Deletion { position, bit }
            | VtCorrection::Insertion { position, bit }
            | VtCorrection::Substitution { position, bit },
        ) = self.detail
        {
            write!(f, " vt_pos={position} bit={bit}")?;
        }
        if !self.redundancy_violations.is_empty() {
            let v: Vec<String> = self
                .redundancy_violations
                .iter()
                .map(ToString::to_string)
                .collect();
            write!(f, " redundancy_violations={}", v.join(","))?;
        }
        for w in &self.warnings {
            write!(f, " warning=\"{w}\"")?;
        }
        Ok(())
    }
}

pub fn encode_strand(msg: &Message, params: &CodeParams) -> Result<Strand, CodecError> {
    let y = vt_encode(msg, params)?;
    let kw = kernel_encode(&y, params).expect("VT encoder yields length-m words");
    Ok(to_strand(&expand(&kw, params)))
}

pub fn decode_strand(
    received: &Strand,
    params: &CodeParams,
) -> Result<(Message, DecodeReport), CodecError> {
    let n = params.n;
    let len = received.len();
    if len + 1 < n || len > n + 1 {
        return Err(CodecError::UncorrectableLength { got: len, n });
    }

    let mut report = DecodeReport {
        received_len: len,
        ..DecodeReport::default()
    };

    if len == n {
        let ew = from_strand(received, params).expect("length checked");
        report.redundancy_violations = verify_redundancy(&ew, params);
        if ew.bits().get(1) != 1 {
            report
                .warnings
                .push("leading bit is 0; base 1 was substituted".to_string());
        }
        if !kernel_parity_ok(&ew, params) {
            report.warnings.push("kernel parity mismatch".to_string());
        }
    }

    let mut bits = first_bits(received);
    bits.remove(1);
    let (word, correction) = match vt_decode(&bits, params) {
        Ok(ok) => ok,
        Err(source) => {
            return Err(CodecError::Uncorrectable {
                source,
                report: Box::new(report),
            })
        }
    };
    report.corrected_error = match correction {
        VtCorrection::None => ErrorKind::None,
        VtCorrection::Deletion { .. } => ErrorKind::Deletion,
        VtCorrection::Insertion { .. } => ErrorKind::Insertion,
        VtCorrection::Substitution { .. } => ErrorKind::Substitution,
    };
    report.detail = Some(correction);
    Ok((extract_message(&word, params), report))
}
