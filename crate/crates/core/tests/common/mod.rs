//! Brute-force references used by the integration and acceptance tests.
//!
//! Nothing here calls into the decoders under test; the only shared pieces
//! are plain data types.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `sum(i * b_i) mod modulus`, 1-indexed.
pub fn checksum(bits: &[u8], modulus: usize) -> usize {
    bits.iter()
        .enumerate()
        .map(|(i, &b)| (i + 1) * b as usize)
        .sum::<usize>()
        % modulus
}

/// All length-`m` words with zero checksum that are one edit away from
/// `received` (or equal to it). The edit kind is implied by the length.
pub fn vt_preimages(received: &[u8], m: usize) -> BTreeSet<Vec<u8>> {
    let modulus = 2 * m + 1;
    let mut out = BTreeSet::new();
    let mut keep = |w: Vec<u8>| {
        if checksum(&w, modulus) == 0 {
            out.insert(w);
        }
    };
    match received.len() {
        len if len + 1 == m => {
            for pos in 0..=len {
                for bit in [0, 1] {
                    let mut w = received.to_vec();
                    w.insert(pos, bit);
                    keep(w);
                }
            }
        }
        len if len == m => {
            keep(received.to_vec());
            for pos in 0..len {
                let mut w = received.to_vec();
                w[pos] ^= 1;
                keep(w);
            }
        }
        len if len == m + 1 => {
            for pos in 0..len {
                let mut w = received.to_vec();
                w.remove(pos);
                keep(w);
            }
        }
        _ => {}
    }
    out
}

/// Every zero-checksum word obtained by deleting one bit of `received`,
/// one entry per deletion position (duplicates kept).
pub fn zero_deletion_candidates(received: &[u8], modulus: usize) -> Vec<Vec<u8>> {
    (0..received.len())
        .map(|pos| {
            let mut w = received.to_vec();
            w.remove(pos);
            w
        })
        .filter(|w| checksum(w, modulus) == 0)
        .collect()
}

/// Every VT codeword of length `m` (modulus `2m + 1`), by enumeration.
pub fn all_vt_codewords(m: usize) -> Vec<Vec<u8>> {
    (0u32..1 << m)
        .map(|v| {
            (0..m)
                .rev()
                .map(|k| ((v >> k) & 1) as u8)
                .collect::<Vec<u8>>()
        })
        .filter(|w| checksum(w, 2 * m + 1) == 0)
        .collect()
}

/// Whether some subset of `set` sums to `d`.
pub fn subset_sum_exists(set: &[usize], d: usize) -> bool {
    (0u32..1 << set.len()).any(|mask| {
        (0..set.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| set[i])
            .sum::<usize>()
            == d
    })
}

/// Straight transcription of the strand construction, written without the
/// library: VT word `y` to the `n`-base strand as a string.
pub fn reference_strand(y: &[u8]) -> String {
    let n = y.len() + 1;
    let mut g = vec![1u8];
    g.extend_from_slice(y);
    let parity = g.iter().map(|&b| b as usize).sum::<usize>() % 2;
    g.push(parity as u8);
    let gi = |k: usize| g[k - 1];
    let mut r = Vec::new();
    for i in 1..n {
        let bit = if i <= (n - 1) / 2 {
            gi(i + 1)
        } else if n.is_multiple_of(2) && i == n / 2 {
            gi(i + 1) ^ gi(n + 1)
        } else {
            gi(1) ^ gi(i + 1)
        };
        r.push(bit);
    }
    let mut e = g.clone();
    e.extend(r);
    (0..n)
        .map(|j| match (e[j], e[j + n]) {
            (0, 0) => 'C',
            (0, 1) => 'A',
            (1, 0) => 'T',
            _ => 'G',
        })
        .collect()
}

/// Positionwise mismatch count of two equal-length strings.
pub fn string_hamming(a: &str, b: &str) -> usize {
    a.chars().zip(b.chars()).filter(|(x, y)| x != y).count()
}

pub fn string_rc(s: &str) -> String {
    s.chars()
        .rev()
        .map(|c| match c {
            'A' => 'T',
            'T' => 'A',
            'C' => 'G',
            'G' => 'C',
            other => other,
        })
        .collect()
}

/// Every single-edit variant of `s`: all deletions, all insertions of each
/// base at each slot, all substitutions to a different base.
pub fn single_edit_variants(s: &str) -> Vec<(String, &'static str)> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    for i in 0..chars.len() {
        let mut v = chars.clone();
        v.remove(i);
        out.push((v.into_iter().collect(), "deletion"));
    }
    for i in 0..=chars.len() {
        for b in ['A', 'C', 'G', 'T'] {
            let mut v = chars.clone();
            v.insert(i, b);
            out.push((v.into_iter().collect(), "insertion"));
        }
    }
    for i in 0..chars.len() {
        for b in ['A', 'C', 'G', 'T'] {
            if b != chars[i] {
                let mut v = chars.clone();
                v[i] = b;
                out.push((v.into_iter().collect(), "substitution"));
            }
        }
    }
    out
}
