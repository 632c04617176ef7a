//! Encodes a file (or a built-in text) into a strand archive, damages it, and
//! decodes it back.
//!
//! cargo run --example archive_roundtrip -- [FILE] [n] [seed]

use vtdna::channel::{corrupt_strands, ErrorMix};
use vtdna::{decode_stream, derive_params, encode_stream, ErrorKind, StrandArchive};

fn main() {
    let mut args = std::env::args().skip(1);
    let payload = match args.next() {
        Some(path) if path != "-" => std::fs::read(&path).expect("readable input"),
        _ => b"Any single insertion, deletion or substitution per strand is corrected.".to_vec(),
    };
    let n: usize = args.next().map_or(12, |a| a.parse().expect("n"));
    let seed: u64 = args.next().map_or(1, |a| a.parse().expect("seed"));
    let params = derive_params(n).expect("valid n");

    let archive = encode_stream(&payload, &params);
    let text = archive.to_string();
    println!("{}", text.lines().take(6).collect::<Vec<_>>().join("\n"));
    println!("... {} strands total\n", archive.strands.len());

    let parsed: StrandArchive = text.parse().expect("archive re-reads");
    let (strands, log) = corrupt_strands(&parsed.strands, &ErrorMix::uniform_errors(), seed, 1);
    for entry in log.iter().take(5) {
        println!("event {entry}");
    }
    let damaged = StrandArchive { strands, ..parsed };

    let decoded =
        decode_stream(&damaged, &params, false).expect("one event per strand is correctable");
    let mut tally = [0usize; 4];
    for report in decoded.reports.iter().flatten() {
        tally[match report.corrected_error {
            ErrorKind::None => 0,
            ErrorKind::Deletion => 1,
            ErrorKind::Insertion => 2,
            ErrorKind::Substitution => 3,
        }] += 1;
    }
    println!(
        "\ncorrections: none={} deletion={} insertion={} substitution={}",
        tally[0], tally[1], tally[2], tally[3]
    );
    println!("payload restored: {}", decoded.payload == payload);
}
