//! Applies every possible single deletion, insertion and substitution to one
//! codeword and shows what the decoder reports for each.
//!
//! cargo run --example single_error_correction -- 12 37

use vtdna::channel::{apply_event, ChannelEvent};
use vtdna::{decode_strand, derive_params, encode_strand, Base, Message};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(10, |a| a.parse().expect("n"));
    let params = derive_params(n).expect("valid n");
    let value: u64 = args
        .next()
        .map_or(11, |a| a.parse().expect("message value"))
        % params.code_size();
    let msg = Message::from_u64(value, &params);
    let clean = encode_strand(&msg, &params).unwrap();
    println!("message {msg} -> {clean}\n");

    let mut events = Vec::new();
    for pos in 1..=n {
        events.push(ChannelEvent::delete(pos));
        for b in Base::ALL {
            if b != clean.get(pos) {
                events.push(ChannelEvent::substitute(pos, b));
            }
        }
    }
    for pos in 1..=n + 1 {
        for b in Base::ALL {
            events.push(ChannelEvent::insert(pos, b));
        }
    }

    let mut recovered = 0;
    for e in &events {
        let received = apply_event(&clean, e).unwrap();
        match decode_strand(&received, &params) {
            Ok((m, report)) => {
                recovered += usize::from(m == msg);
                println!(
                    "{:<16} {:<12} -> {m} [{report}]",
                    e.to_string(),
                    received.to_string()
                );
            }
            Err(err) => println!(
                "{:<16} {:<12} -> error: {err}",
                e.to_string(),
                received.to_string()
            ),
        }
    }
    println!("\n{recovered}/{} single edits recovered", events.len());
}
