//! Corrupts a batch of strands through the seeded channel and measures how
//! many decode correctly, with one event per strand and with more.
//!
//! cargo run --release --example channel_simulation -- 16 5000

use vtdna::channel::{corrupt_strands, ErrorMix};
use vtdna::{decode_strand, derive_params, encode_strand, Message};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(16, |a| a.parse().expect("n"));
    let count: u64 = args.next().map_or(5000, |a| a.parse().expect("count"));
    let params = derive_params(n).expect("valid n");

    let messages: Vec<Message> = (0..count)
        .map(|i| Message::from_u64(i.wrapping_mul(0x9E37_79B9_7F4A_7C15), &params))
        .collect();
    let strands: Vec<_> = messages
        .iter()
        .map(|m| encode_strand(m, &params).unwrap())
        .collect();

    let mix: ErrorMix = "del:0.3,ins:0.3,sub:0.3,none:0.1".parse().unwrap();
    for events in [1, 2, 3] {
        let (corrupted, _log) = corrupt_strands(&strands, &mix, 7, events);
        let mut ok = 0;
        let mut failed = 0;
        for (received, msg) in corrupted.iter().zip(&messages) {
            match decode_strand(received, &params) {
                Ok((m, _)) if &m == msg => ok += 1,
                Ok(_) => {}
                Err(_) => failed += 1,
            }
        }
        let wrong = count as usize - ok - failed;
        println!(
            "n={n} events/strand<={events}: {ok}/{count} correct, {failed} flagged uncorrectable, {wrong} miscorrected"
        );
    }
}
