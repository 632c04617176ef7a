//! Enumerates the codebook for each n and compares the measured
//! reverse-complement distance with 2*floor((n-3)/2).
//!
//! cargo run --release --example codebook_analysis -- 6 16

use vtdna::analysis::{analyze, check_constraints, rc_formula, Thresholds};
use vtdna::derive_params;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer"));
    let lo = args.next().unwrap_or(6);
    let hi = args.next().unwrap_or(14);

    println!(
        "{:>3} {:>6} {:>5} {:>5} {:>4} {:>8} {:>7}  constraints",
        "n", "size", "d_H", "d_R", "d_RC", "formula", "GC"
    );
    for n in lo..=hi {
        let params = derive_params(n).expect("valid n");
        let report = match analyze(&params) {
            Ok(r) => r,
            Err(e) => {
                println!("{n:>3} {e}");
                continue;
            }
        };
        let checks = check_constraints(
            &report,
            &Thresholds {
                rc_min: Some(rc_formula(n)),
                ..Default::default()
            },
        );
        let verdicts: Vec<String> = checks
            .iter()
            .map(|c| format!("{}:{}", c.name, if c.pass { "ok" } else { "FAIL" }))
            .collect();
        println!(
            "{:>3} {:>6} {:>5} {:>5} {:>4} {:>8} {:>7}  {}",
            n,
            report.code_size,
            report.min_hamming.map_or("-".into(), |d| d.to_string()),
            report.min_reverse,
            report.min_rc,
            report.rc_formula_value,
            format!("{}..{}", report.gc_min, report.gc_max),
            verdicts.join(" ")
        );
    }
}
