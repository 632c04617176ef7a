//! Prints the derived code constants for a range of strand lengths.
//!
//! cargo run --example code_parameters -- 6 32

use vtdna::derive_params;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer"));
    let lo = args.next().unwrap_or(6);
    let hi = args.next().unwrap_or(24);

    println!(
        "{:>4} {:>4} {:>8} {:>4}  {:<28} rate",
        "n", "m", "modulus", "l", "parity positions"
    );
    for n in lo..=hi {
        match derive_params(n) {
            Ok(p) => {
                let parity: Vec<String> =
                    p.parity_positions.iter().map(|x| x.to_string()).collect();
                println!(
                    "{:>4} {:>4} {:>8} {:>4}  {:<28} {:.3} bits/base",
                    p.n,
                    p.m,
                    p.vt_modulus,
                    p.l,
                    parity.join(","),
                    p.l as f64 / p.n as f64
                );
            }
            Err(e) => println!("{n:>4} {e}"),
        }
    }
}
