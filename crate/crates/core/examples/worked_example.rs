//! Walks one 4-bit message through every stage of the n=10 code and back
//! from a strand that lost a base.
//!
//! cargo run --example worked_example

use vtdna::dnamap::{first_bits, to_strand};
use vtdna::kernel::{expand, kernel_encode};
use vtdna::vt::{deficiency, vt_decode_deletion, vt_encode};
use vtdna::{decode_strand, derive_params, Message, Strand};

fn main() {
    let params = derive_params(10).expect("n=10 is valid");
    println!("{params}\n");

    let msg = Message::new("1011".parse().unwrap(), &params).unwrap();
    let vt = vt_encode(&msg, &params).unwrap();
    let kernel = kernel_encode(&vt, &params).unwrap();
    let expanded = expand(&kernel, &params);
    let strand = to_strand(&expanded);

    println!("message        {msg}");
    println!("VT word        {vt}");
    println!("kernel word    {kernel}");
    println!("expanded word  {expanded}");
    println!("strand         {strand}");

    let received: Strand = "TGGCCTTAA".parse().unwrap();
    let mut bits = first_bits(&received);
    bits.remove(1);
    println!("\nreceived       {received}");
    println!(
        "first bits     {bits} (deficiency {}, weight {})",
        deficiency(&bits, params.vt_modulus).0,
        bits.weight()
    );
    let (fixed, correction) = vt_decode_deletion(&bits, &params).unwrap();
    println!("corrected      {fixed} ({correction:?})");

    let (decoded, report) = decode_strand(&received, &params).unwrap();
    println!("decoded        {decoded} [{report}]");
}
