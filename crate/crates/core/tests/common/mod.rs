#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use veer_core::BraidWord;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A freely reduced word of exactly `len` letters, uniform among them.
pub fn word_of_len(r: &mut impl Rng, len: usize) -> BraidWord {
    let letters = [1i8, -1, 2, -2];
    let mut out: Vec<i8> = Vec::with_capacity(len);
    while out.len() < len {
        let x = letters[r.gen_range(0..4)];
        if out.last() != Some(&-x) {
            out.push(x);
        }
    }
    BraidWord::new(out).unwrap()
}

/// A reduced word with length uniform in `0..=max`.
pub fn word(r: &mut impl Rng, max: usize) -> BraidWord {
    let len = r.gen_range(0..=max);
    word_of_len(r, len)
}

/// A positive word with length uniform in `1..=max`.
pub fn positive_word(r: &mut impl Rng, max: usize) -> BraidWord {
    let len = r.gen_range(1..=max);
    BraidWord::new((0..len).map(|_| if r.gen_bool(0.5) { 1 } else { 2 })).unwrap()
}
