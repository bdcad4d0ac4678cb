//! Sidedness of generator images without expanding them, via handle
//! reduction in `B3`.
//!
//! Braid images of loops grow exponentially with word length, so for long
//! words the side of `β(y_i)` relative to `y_i` is read instead from the
//! `σ1`-sign of a conjugate of `β`: `σ1`-positive braids move `y1` right,
//! and conjugating by `τ_i` (with `τ_i(y1) = y_i`) moves the question to the
//! other generators.

use std::cmp::Ordering;

use num_rational::Ratio;

use crate::braid::BraidWord;
use crate::freegroup::Generator;
use crate::sidedness::Side;

/// The `σ1`-sign of a braid: `Greater` if some representative has only
/// positive `σ1` letters (and at least one), `Less` for the mirror, `Equal`
/// if `σ1`-free.
pub fn sigma1_sign(w: &BraidWord) -> Ordering {
    let mut cur: Vec<i8> = w.letters().to_vec();
    // Everything before `start` has no handle and its σ1 letters share a sign.
    let mut start = 0usize;
    loop {
        let mut last: Option<usize> = None;
        let mut found = None;
        let mut i = start;
        while i < cur.len() {
            let x = cur[i];
            if x.abs() == 1 {
                if let Some(l) = last {
                    if cur[l] == -x {
                        found = Some((l, i));
                        break;
                    }
                }
                last = Some(i);
            }
            i += 1;
        }
        let Some((a, b)) = found else {
            return match cur.iter().find(|x| x.abs() == 1) {
                None => Ordering::Equal,
                Some(&x) if x > 0 => Ordering::Greater,
                Some(_) => Ordering::Less,
            };
        };
        let e = cur[a];
        let p: i64 = cur[a + 1..b].iter().map(|&x| x.signum() as i64).sum();
        let mut replacement = Vec::with_capacity(p.unsigned_abs() as usize + 2);
        replacement.push(-2 * e);
        replacement.extend(std::iter::repeat_n(if p > 0 { 1 } else { -1 }, p.unsigned_abs() as usize));
        replacement.push(2 * e);
        let mut next = Vec::with_capacity(cur.len() + replacement.len());
        next.extend_from_slice(&cur[..a]);
        let mut min_len = a;
        for &x in replacement.iter().chain(&cur[b + 1..]) {
            if next.last() == Some(&-x) {
                next.pop();
                min_len = min_len.min(next.len());
            } else {
                next.push(x);
            }
        }
        // The untouched prefix `next[..min_len]` holds no handle; the next one
        // can start no earlier than its last σ1 letter.
        start = next[..min_len].iter().rposition(|x| x.abs() == 1).unwrap_or(0);
        cur = next;
    }
}

fn tau(g: Generator) -> BraidWord {
    match g {
        Generator::Y1 => BraidWord::identity(),
        Generator::Y2 => BraidWord::from_valid([1]),
        Generator::Y3 => BraidWord::from_valid([2, 1]),
    }
}

/// The side of `β(y_i)` relative to `y_i`.
pub fn generator_side(w: &BraidWord, g: Generator) -> Side {
    let t = tau(g);
    Side::from_ordering(sigma1_sign(&t.inverse().concat(w).concat(&t)))
}

/// Whether `Δ^{-2j} β` sends `y_i` to the right of or onto `y_i`.
fn holds(w: &BraidWord, g: Generator, j: i64) -> bool {
    generator_side(&BraidWord::delta2k(-j).concat(w), g) != Side::LeftOf
}

/// The largest `j` with `Δ^{-2j} β (y_i)` right of or equal to `y_i`: the
/// boundary twisting of the image of `y_i`.
pub fn twist_count(w: &BraidWord, g: Generator) -> i64 {
    twist_count_near(w, g, 0)
}

/// As [`twist_count`], searching outward from `guess`.
pub fn twist_count_near(w: &BraidWord, g: Generator, guess: i64) -> i64 {
    let (mut lo, mut hi);
    if holds(w, g, guess) {
        lo = guess;
        let mut step = 1;
        hi = guess + step;
        while holds(w, g, hi) {
            lo = hi;
            step *= 2;
            hi = guess + step;
        }
    } else {
        hi = guess;
        let mut step = 1;
        lo = guess - step;
        while !holds(w, g, lo) {
            hi = lo;
            step *= 2;
            lo = guess - step;
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(w, g, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The translation number of `β` in units of the full twist (its fractional
/// Dehn twist coefficient), exact.
///
/// Twist counts satisfy `nτ - 1 ≤ twist_count(β^n) ≤ nτ` and `6τ` is an
/// integer, so `τ` is recovered from `β^12`.
pub fn translation_number(w: &BraidWord) -> Ratio<i64> {
    let k1 = twist_count(w, Generator::Y1);
    let k12 = twist_count_near(&w.power(12), Generator::Y1, 12 * k1 + 6);
    Ratio::new(k12 + k12.rem_euclid(2), 12)
}
