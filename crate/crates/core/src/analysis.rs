//! Exhaustive codebook analysis.
//!
//! Every codeword is generated and every ordered pair is compared, so the
//! reported minima are exact. The scans run on the rayon pool and reduce by
//! min/max.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::codec::encode_strand;
use crate::dnamap::{gc_weight, hamming_slices, Base, Strand};
use crate::params::CodeParams;
use crate::vt::Message;

/// Default ceiling on the number of codewords `enumerate_codebook` will build.
pub const DEFAULT_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("codebook has {required} codewords, above the cap of {cap}")]
    CapExceeded { required: u64, cap: u64 },
}

/// `2 * floor((n - 3) / 2)`.
pub fn rc_formula(n: usize) -> usize {
    2 * (n.saturating_sub(3) / 2)
}

pub fn enumerate_codebook(params: &CodeParams, cap: u64) -> Result<Vec<Strand>, AnalysisError> {
    let size = params.code_size();
    if params.l >= 64 || size > cap {
        return Err(AnalysisError::CapExceeded {
            required: size,
            cap,
        });
    }
    Ok((0..size)
        .into_par_iter()
        .map(|v| {
            encode_strand(&Message::from_u64(v, params), params)
                .expect("message has length l by construction")
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub l: usize,
    pub code_size: u64,
    /// `None` when the code has a single word.
    pub min_hamming: Option<usize>,
    pub min_reverse: usize,
    pub min_rc: usize,
    pub rc_formula_value: usize,
    pub gc_min: usize,
    pub gc_max: usize,
    /// 50% content expressed in bases, `n / 2`.
    pub gc_target: f64,
    pub all_distinct: bool,
}

/// How the measured RC distance compares with `2 * floor((n - 3) / 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RcClaim {
    Equal,
    Exceeds,
    Below,
}

impl RcClaim {
    pub fn as_str(self) -> &'static str {
        match self {
            RcClaim::Equal => "equal",
            RcClaim::Exceeds => "exceeds",
            RcClaim::Below => "below",
        }
    }
}

impl AnalysisReport {
    pub fn rc_claim(&self) -> RcClaim {
        use std::cmp::Ordering::*;
        match self.min_rc.cmp(&self.rc_formula_value) {
            Equal => RcClaim::Equal,
            Greater => RcClaim::Exceeds,
            Less => RcClaim::Below,
        }
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "l={}", self.l)?;
        writeln!(f, "code_size={}", self.code_size)?;
        match self.min_hamming {
            Some(d) => writeln!(f, "min_hamming={d}")?,
            None => writeln!(f, "min_hamming=none")?,
        }
        writeln!(f, "min_reverse={}", self.min_reverse)?;
        writeln!(f, "min_rc={}", self.min_rc)?;
        writeln!(f, "rc_formula_value={}", self.rc_formula_value)?;
        writeln!(f, "rc_claim={}", self.rc_claim().as_str())?;
        writeln!(f, "gc_min={}", self.gc_min)?;
        writeln!(f, "gc_max={}", self.gc_max)?;
        writeln!(f, "gc_target={}", self.gc_target)?;
        write!(f, "all_distinct={}", self.all_distinct)
    }
}

pub fn analyze(params: &CodeParams) -> Result<AnalysisReport, AnalysisError> {
    analyze_with_cap(params, DEFAULT_CAP)
}

pub fn analyze_with_cap(params: &CodeParams, cap: u64) -> Result<AnalysisReport, AnalysisError> {
    let book = enumerate_codebook(params, cap)?;
    Ok(analyze_codebook(params, &book))
}

/// Computes the report for an explicit codebook. Callers pass the full code.
pub fn analyze_codebook(params: &CodeParams, book: &[Strand]) -> AnalysisReport {
    let reversed: Vec<Vec<Base>> = book.iter().map(|s| s.reverse().bases().to_vec()).collect();
    let rc: Vec<Vec<Base>> = book
        .iter()
        .map(|s| s.reverse_complement().bases().to_vec())
        .collect();

    let (min_hamming, min_reverse, min_rc) = (0..book.len())
        .into_par_iter()
        .map(|i| {
            let x = book[i].bases();
            let ham = book[i + 1..]
                .iter()
                .map(|y| hamming_slices(x, y.bases()))
                .min();
            let rev = book
                .iter()
                .map(|y| hamming_slices(&reversed[i], y.bases()))
                .min()
                .unwrap_or(usize::MAX);
            let rcd = book
                .iter()
                .map(|y| hamming_slices(&rc[i], y.bases()))
                .min()
                .unwrap_or(usize::MAX);
            (ham, rev, rcd)
        })
        .reduce(
            || (None, usize::MAX, usize::MAX),
            |a, b| {
                let ham = match (a.0, b.0) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                };
                (ham, a.1.min(b.1), a.2.min(b.2))
            },
        );

    let (gc_min, gc_max) = book
        .par_iter()
        .map(|s| {
            let w = gc_weight(s);
            (w, w)
        })
        .reduce(|| (usize::MAX, 0), |a, b| (a.0.min(b.0), a.1.max(b.1)));

    let mut sorted: Vec<&Strand> = book.iter().collect();
    sorted.par_sort_unstable();
    let all_distinct = sorted.windows(2).all(|w| w[0] != w[1]);

    AnalysisReport {
        n: params.n,
        l: params.l,
        code_size: book.len() as u64,
        min_hamming,
        min_reverse,
        min_rc,
        rc_formula_value: rc_formula(params.n),
        gc_min,
        gc_max,
        gc_target: params.n as f64 / 2.0,
        all_distinct,
    }
}

/// User-chosen thresholds. Constraints without a threshold are skipped,
/// except GC content which defaults to 50%.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Thresholds {
    pub d_min: Option<usize>,
    pub reverse_min: Option<usize>,
    pub rc_min: Option<usize>,
    /// Target GC weight in bases; `None` means `n / 2`.
    pub gc_target: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintCheck {
    pub name: &'static str,
    pub measured: String,
    pub threshold: String,
    pub pass: bool,
}

impl fmt::Display for ConstraintCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}={} measured={} threshold={}",
            self.name,
            if self.pass { "pass" } else { "fail" },
            self.measured,
            self.threshold
        )
    }
}

/// Evaluates the four distance/content constraints.
///
/// GC content is a fixed-value constraint: every codeword must sit exactly on
/// the target for even `n`, and within half a base of it for odd `n`.
pub fn check_constraints(report: &AnalysisReport, thresholds: &Thresholds) -> Vec<ConstraintCheck> {
    let mut out = Vec::new();
    if let Some(d) = thresholds.d_min {
        out.push(ConstraintCheck {
            name: "hamming",
            measured: report
                .min_hamming
                .map_or_else(|| "none".to_string(), |h| h.to_string()),
            threshold: d.to_string(),
            pass: report.min_hamming.is_none_or(|h| h >= d),
        });
    }
    if let Some(d) = thresholds.reverse_min {
        out.push(ConstraintCheck {
            name: "reverse",
            measured: report.min_reverse.to_string(),
            threshold: d.to_string(),
            pass: report.min_reverse >= d,
        });
    }
    if let Some(d) = thresholds.rc_min {
        out.push(ConstraintCheck {
            name: "reverse_complement",
            measured: report.min_rc.to_string(),
            threshold: d.to_string(),
            pass: report.min_rc >= d,
        });
    }
    let target = thresholds.gc_target.unwrap_or(report.n as f64 / 2.0);
    let slack = if report.n.is_multiple_of(2) { 0.0 } else { 0.5 };
    let within = |w: usize| (w as f64 - target).abs() <= slack + 1e-9;
    out.push(ConstraintCheck {
        name: "gc_content",
        measured: format!("{}..{}", report.gc_min, report.gc_max),
        threshold: format!("{target}+/-{slack}"),
        pass: within(report.gc_min) && within(report.gc_max),
    });
    out
}
