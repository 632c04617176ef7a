//! Command-line front end.
//!
//! Payload and archive data go to the output path (or stdout for `-`);
//! reports and diagnostics go to stderr, except for `params` and `analyze`
//! whose key=value output is the payload.
//!
//! Exit codes: 0 success, 1 decode or verification failure, 2 usage or
//! parameter error, 3 I/O error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::analysis::{analyze_with_cap, check_constraints, rc_formula, Thresholds, DEFAULT_CAP};
use crate::channel::{corrupt_strands, ErrorMix};
use crate::framing::{decode_stream, encode_stream, FramingError, StrandArchive};
use crate::params::{derive_params, CodeParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "vtdna", version, about = "VT/kernel-code DNA strand codec")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the code constants for strand length n.
    Params(ParamsArgs),
    /// Encode a file into a strand archive.
    Encode(EncodeArgs),
    /// Decode a strand archive back into bytes.
    Decode(DecodeArgs),
    /// Enumerate the codebook and report distances and GC content.
    Analyze(AnalyzeArgs),
    /// Corrupt the strands of an archive with seeded random events.
    Simulate(SimulateArgs),
    /// Encode, corrupt, decode and compare a file.
    Roundtrip(RoundtripArgs),
}

#[derive(Debug, Args)]
pub struct ParamsArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    #[arg(long)]
    pub n: usize,
    /// Input file, `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    /// Output archive, `-` for stdout.
    #[arg(long = "out", default_value = "-")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    #[arg(long = "out", default_value = "-")]
    pub output: PathBuf,
    /// Write the payload even if some strands are uncorrectable.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub n: usize,
    /// Minimum pairwise Hamming distance to require.
    #[arg(long = "d-min")]
    pub d_min: Option<usize>,
    /// Minimum reverse distance to require.
    #[arg(long = "rev-min")]
    pub rev_min: Option<usize>,
    /// Minimum reverse-complement distance; defaults to 2*floor((n-3)/2).
    #[arg(long = "rc-min")]
    pub rc_min: Option<usize>,
    /// GC weight target in bases; defaults to n/2.
    #[arg(long = "gc-target")]
    pub gc_target: Option<f64>,
    /// Refuse codebooks larger than this.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    /// Also write the report as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ChannelArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Outcome probabilities, e.g. `del:0.3,ins:0.3,sub:0.3,none:0.1`.
    #[arg(long, default_value = "none:1")]
    pub mix: String,
    /// Events drawn per strand. Values above 1 exceed what the code corrects.
    #[arg(long, default_value_t = 1)]
    pub events: usize,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    #[arg(long = "out", default_value = "-")]
    pub output: PathBuf,
    /// Event log destination.
    #[arg(long)]
    pub log: Option<PathBuf>,
    #[command(flatten)]
    pub channel: ChannelArgs,
}

#[derive(Debug, Args)]
pub struct RoundtripArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    #[command(flatten)]
    pub channel: ChannelArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn is_std(p: &Path) -> bool {
    p.as_os_str() == "-"
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    if is_std(path) {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).map_err(io_err(path))?;
        Ok(buf)
    } else {
        fs::read(path).map_err(io_err(path))
    }
}

fn write_output(path: &Path, data: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    if is_std(path) {
        stdout.write_all(data).map_err(io_err(path))
    } else {
        fs::write(path, data).map_err(io_err(path))
    }
}

fn read_archive(path: &Path, params: &CodeParams) -> Result<StrandArchive, CliError> {
    let raw = read_input(path)?;
    let text = String::from_utf8(raw).map_err(|_| usage("archive is not UTF-8 text"))?;
    let archive: StrandArchive = text.parse().map_err(usage)?;
    if archive.n != params.n {
        return Err(usage(FramingError::ParamsMismatch {
            archive: archive.n,
            expected: params.n,
        }));
    }
    Ok(archive)
}

fn channel_mix(args: &ChannelArgs) -> Result<ErrorMix, CliError> {
    args.mix.parse().map_err(usage)
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let wr = |e: io::Error| CliError::Io {
        path: "<stream>".into(),
        source: e,
    };
    match cmd {
        Command::Params(a) => {
            let p = derive_params(a.n).map_err(usage)?;
            writeln!(out, "{p}").map_err(wr)?;
            Ok(EXIT_OK)
        }
        Command::Encode(a) => {
            let p = derive_params(a.n).map_err(usage)?;
            let payload = read_input(&a.input)?;
            let archive = encode_stream(&payload, &p);
            write_output(&a.output, archive.to_string().as_bytes(), out)?;
            writeln!(
                err,
                "encoded {} bytes into {} strands (n={}, l={})",
                payload.len(),
                archive.strands.len(),
                p.n,
                p.l
            )
            .map_err(wr)?;
            Ok(EXIT_OK)
        }
        Command::Decode(a) => {
            let p = derive_params(a.n).map_err(usage)?;
            let archive = read_archive(&a.input, &p)?;
            let decoded = match decode_stream(&archive, &p, a.force) {
                Ok(d) => d,
                Err(e @ FramingError::Decode { .. }) => {
                    return Err(CliError::Failure(e.to_string()))
                }
                Err(e) => return Err(usage(e)),
            };
            for (i, r) in decoded.reports.iter().enumerate() {
                match r {
                    Ok(rep) => writeln!(err, "strand {i}: {rep}"),
                    Err(e) => writeln!(err, "strand {i}: FAILED {e}"),
                }
                .map_err(wr)?;
            }
            write_output(&a.output, &decoded.payload, out)?;
            Ok(if decoded.failures().next().is_some() {
                EXIT_FAILURE
            } else {
                EXIT_OK
            })
        }
        Command::Analyze(a) => {
            let p = derive_params(a.n).map_err(usage)?;
            let report = analyze_with_cap(&p, a.cap).map_err(usage)?;
            writeln!(out, "{report}").map_err(wr)?;
            let thresholds = Thresholds {
                d_min: a.d_min,
                reverse_min: a.rev_min,
                rc_min: Some(a.rc_min.unwrap_or_else(|| rc_formula(p.n))),
                gc_target: a.gc_target,
            };
            let checks = check_constraints(&report, &thresholds);
            for c in &checks {
                writeln!(out, "{c}").map_err(wr)?;
            }
            if let Some(path) = &a.report {
                let json = serde_json::json!({ "report": report, "constraints": checks });
                let text = serde_json::to_string_pretty(&json).expect("report serializes");
                fs::write(path, text + "\n").map_err(io_err(path))?;
            }
            Ok(if checks.iter().all(|c| c.pass) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Simulate(a) => {
            let p = derive_params(a.n).map_err(usage)?;
            let mix = channel_mix(&a.channel)?;
            let archive = read_archive(&a.input, &p)?;
            let (strands, log) =
                corrupt_strands(&archive.strands, &mix, a.channel.seed, a.channel.events);
            let corrupted = StrandArchive { strands, ..archive };
            write_output(&a.output, corrupted.to_string().as_bytes(), out)?;
            let log_text: String = log.iter().map(|e| format!("{e}\n")).collect();
            match &a.log {
                Some(path) => fs::write(path, log_text).map_err(io_err(path))?,
                None => err.write_all(log_text.as_bytes()).map_err(wr)?,
            }
            Ok(EXIT_OK)
        }
        Command::Roundtrip(a) => {
            let p = derive_params(a.n).map_err(usage)?;
            let mix = channel_mix(&a.channel)?;
            let payload = read_input(&a.input)?;
            let archive = encode_stream(&payload, &p);
            let (strands, log) =
                corrupt_strands(&archive.strands, &mix, a.channel.seed, a.channel.events);
            let corrupted = StrandArchive { strands, ..archive };
            let events = log.iter().filter(|e| e.event.is_some()).count();
            let result = decode_stream(&corrupted, &p, true);
            let pass =
                matches!(&result, Ok(d) if d.payload == payload && d.failures().next().is_none());
            writeln!(
                err,
                "bytes={} strands={} events={}",
                payload.len(),
                corrupted.strands.len(),
                events
            )
            .map_err(wr)?;
            writeln!(out, "{}", if pass { "PASS" } else { "FAIL" }).map_err(wr)?;
            Ok(if pass { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}
