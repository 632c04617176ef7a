//! Strand-level codec for DNA data storage.
//!
//! An `l`-bit message is protected by a Varshamov–Tenengolts code, embedded in
//! a binary kernel code, extended with homomorphism redundancy bits and mapped
//! two bits per base onto an `n`-base strand. The resulting strands have
//! balanced GC content and a large reverse-complement distance, and any single
//! insertion, deletion or substitution is corrected on decode.
//!
//! ```
//! use vtdna::{decode_strand, derive_params, encode_strand, Message};
//!
//! let params = derive_params(10).unwrap();
//! let msg = Message::new("1011".parse().unwrap(), &params).unwrap();
//! let strand = encode_strand(&msg, &params).unwrap();
//! assert_eq!(strand.to_string(), "TGGGCCTTAA");
//!
//! let damaged = "TGGCCTTAA".parse().unwrap();
//! let (decoded, _report) = decode_strand(&damaged, &params).unwrap();
//! assert_eq!(decoded, msg);
//! ```

pub mod analysis;
pub mod bits;
pub mod channel;
pub mod cli;
pub mod codec;
pub mod dnamap;
pub mod framing;
pub mod kernel;
pub mod params;
pub mod vt;

pub use analysis::{analyze, check_constraints, enumerate_codebook, AnalysisReport, Thresholds};
pub use bits::BitString;
pub use channel::{apply_event, random_event, ChannelEvent, ErrorMix, EventKind};
pub use codec::{decode_strand, encode_strand, CodecError, DecodeReport, ErrorKind};
pub use dnamap::{Base, Strand};
pub use framing::{decode_stream, encode_stream, StrandArchive};
pub use kernel::{ExpandedWord, KernelWord};
pub use params::{derive_params, CodeParams};
pub use vt::{Message, VtWord};
