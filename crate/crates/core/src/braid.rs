//! Words in the 3-strand braid group.
//!
//! A word `g1 g2 ... gL` composes as `g1 ∘ g2 ∘ ... ∘ gL`: the rightmost
//! letter acts on loops first. Words are kept freely reduced; equality of
//! braids beyond free reduction is decided through the Burau matrices.

use std::fmt;

use crate::error::ParseError;

/// Hard cap on the number of letters a parsed word may expand to.
pub const MAX_PARSED_LETTERS: usize = 1_000_000;

/// A freely reduced word in `σ1^±1, σ2^±1`, stored as signed indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<i8>,
}

fn push_reduced(out: &mut Vec<i8>, x: i8) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

impl BraidWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// `σ_i^sign`, for `i ∈ {1, 2}`.
    pub fn sigma(i: u8, positive: bool) -> Self {
        assert!(i == 1 || i == 2, "B3 has generators 1 and 2");
        let x = i as i8;
        Self {
            letters: vec![if positive { x } else { -x }],
        }
    }

    /// Validates letters (each in `{±1, ±2}`) and freely reduces.
    pub fn new(letters: impl IntoIterator<Item = i8>) -> Result<Self, ParseError> {
        let mut out = Vec::new();
        for (pos, x) in letters.into_iter().enumerate() {
            if !matches!(x, 1 | -1 | 2 | -2) {
                return Err(ParseError::new(pos, format!("generator index {x} is not in B3")));
            }
            push_reduced(&mut out, x);
        }
        Ok(Self { letters: out })
    }

    /// Callers guarantee that every letter is in `{±1, ±2}`.
    pub(crate) fn from_valid(letters: impl IntoIterator<Item = i8>) -> Self {
        let mut out = Vec::new();
        for x in letters {
            debug_assert!(matches!(x, 1 | -1 | 2 | -2));
            push_reduced(&mut out, x);
        }
        Self { letters: out }
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True iff every letter is a positive generator.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&x| x > 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&x| x.signum() as i64).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.letters.clone();
        out.reserve(other.letters.len());
        for &x in &other.letters {
            push_reduced(&mut out, x);
        }
        Self { letters: out }
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|&x| -x).collect(),
        }
    }

    pub fn power(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.concat(&base);
        }
        acc
    }

    /// The half twist `Δ = σ1 σ2 σ1`.
    pub fn delta() -> Self {
        Self { letters: vec![1, 2, 1] }
    }

    /// `Δ^n`.
    pub fn delta_pow(n: i64) -> Self {
        Self::delta().power(n)
    }

    /// `Δ^{2k}`, the `k`-th power of the central full twist.
    pub fn delta2k(k: i64) -> Self {
        Self::delta_pow(2 * k)
    }

    /// `τ · self · τ⁻¹`.
    pub fn conjugate_by(&self, tau: &Self) -> Self {
        tau.concat(self).concat(&tau.inverse())
    }

    /// Parses the textual grammar: tokens `±i`, `s<i>[^n]`, `Delta[^n]`,
    /// `Delta2[^n]`, separated by whitespace, `.` or `,`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text).run()
    }
}

impl std::str::FromStr for BraidWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse(s)
    }
}

/// Space-separated signed indices, e.g. `1 2 -1`; the identity renders as
/// the empty string.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    out: Vec<i8>,
}

fn is_sep(b: u8) -> bool {
    b.is_ascii_whitespace() || b == b'.' || b == b','
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            out: Vec::new(),
        }
    }

    fn err(&self, at: usize, msg: impl Into<String>) -> ParseError {
        ParseError::new(at, msg.into())
    }

    fn run(mut self) -> Result<BraidWord, ParseError> {
        loop {
            while self.pos < self.bytes.len() && is_sep(self.bytes[self.pos]) {
                self.pos += 1;
            }
            if self.pos == self.bytes.len() {
                break;
            }
            self.token()?;
            if self.pos < self.bytes.len() && !is_sep(self.bytes[self.pos]) {
                return Err(self.err(self.pos, "expected a separator between tokens"));
            }
        }
        Ok(BraidWord { letters: self.out })
    }

    fn signed_int(&mut self) -> Option<(usize, i64)> {
        let start = self.pos;
        let mut p = self.pos;
        if p < self.bytes.len() && (self.bytes[p] == b'-' || self.bytes[p] == b'+') {
            p += 1;
        }
        let digits_start = p;
        while p < self.bytes.len() && self.bytes[p].is_ascii_digit() {
            p += 1;
        }
        if p == digits_start {
            return None;
        }
        self.pos = p;
        let value = self.src[start..p].parse::<i64>().unwrap_or(i64::MAX);
        Some((start, value))
    }

    fn optional_exponent(&mut self) -> Result<i64, ParseError> {
        if self.bytes.get(self.pos) != Some(&b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let at = self.pos;
        match self.signed_int() {
            Some((_, n)) if n != i64::MAX => Ok(n),
            Some(_) => Err(self.err(at, "exponent out of range")),
            None => Err(self.err(at, "expected an integer exponent after '^'")),
        }
    }

    fn emit(&mut self, at: usize, unit: &[i8], n: i64) -> Result<(), ParseError> {
        let count = (unit.len() as u128) * (n.unsigned_abs() as u128);
        if self.out.len() as u128 + count > MAX_PARSED_LETTERS as u128 {
            return Err(self.err(at, "word too long"));
        }
        for _ in 0..n.unsigned_abs() {
            if n > 0 {
                for &x in unit {
                    push_reduced(&mut self.out, x);
                }
            } else {
                for &x in unit.iter().rev() {
                    push_reduced(&mut self.out, -x);
                }
            }
        }
        Ok(())
    }

    fn token(&mut self) -> Result<(), ParseError> {
        let start = self.pos;
        let rest = &self.src[start..];
        if rest.starts_with("Delta2") {
            self.pos += "Delta2".len();
            let n = self.optional_exponent()?;
            return self.emit(start, &[1, 2, 1, 1, 2, 1], n);
        }
        if rest.starts_with("Delta") {
            self.pos += "Delta".len();
            let n = self.optional_exponent()?;
            return self.emit(start, &[1, 2, 1], n);
        }
        if self.bytes[start] == b's' {
            self.pos += 1;
            let at = self.pos;
            let idx = match self.signed_int() {
                Some((_, v)) if !matches!(self.bytes[at], b'-' | b'+') => v,
                _ => return Err(self.err(at, "expected a generator index after 's'")),
            };
            if idx != 1 && idx != 2 {
                return Err(self.err(start, format!("generator s{idx} is not in B3")));
            }
            let n = self.optional_exponent()?;
            return self.emit(start, &[idx as i8], n);
        }
        match self.signed_int() {
            Some((_, v)) if matches!(v, 1 | -1 | 2 | -2) => self.emit(start, &[v as i8], 1),
            Some((_, v)) => Err(self.err(start, format!("generator index {v} is not in B3"))),
            None => Err(self.err(start, "unrecognized token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("1 2 -1").letters(), &[1, 2, -1]);
        assert!(w("s1 s1^-1").is_empty());
        assert_eq!(w("Delta^2").letters(), &[1, 2, 1, 1, 2, 1]);
        assert_eq!(w("Delta2"), w("Delta^2"));
        assert_eq!(w("Delta2^-1"), BraidWord::delta2k(-1));
        assert_eq!(w("s2^3,1.-2"), BraidWord::new([2, 2, 2, 1, -2]).unwrap());
        assert!(w("").is_empty());
        assert!(w("  ., ").is_empty());
        assert_eq!(w("Delta^-1").letters(), &[-1, -2, -1]);
        assert_eq!(w("+1"), w("1"));
        assert!(w("s1^0").is_empty());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let e = BraidWord::parse("1 s3").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = BraidWord::parse("1 2 3").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = BraidWord::parse("s9").unwrap_err();
        assert_eq!(e.offset, 0);
        assert_eq!(BraidWord::parse("0").unwrap_err().offset, 0);
        assert_eq!(BraidWord::parse("1 x").unwrap_err().offset, 2);
        assert_eq!(BraidWord::parse("s1^").unwrap_err().offset, 3);
        assert_eq!(BraidWord::parse("12").unwrap_err().offset, 0);
        assert_eq!(BraidWord::parse("1-2").unwrap_err().offset, 1);
        assert_eq!(BraidWord::parse("s-1").unwrap_err().offset, 1);
        assert!(BraidWord::parse("Delta^99999999999").is_err());
        assert!(BraidWord::parse("Deltax").is_err());
    }

    #[test]
    fn group_operations() {
        assert_eq!(w("1 2").inverse(), w("-2 -1"));
        assert_eq!(w("1 2").power(6).exponent_sum(), 12);
        let x = w("1 -2 2 2 -1 1");
        assert!(x.concat(&x.inverse()).is_empty());
        assert_eq!(w("1 2").power(-2), w("-2 -1 -2 -1"));
        assert!(w("1 2").power(0).is_empty());
    }

    #[test]
    fn delta2k_examples() {
        assert!(BraidWord::delta2k(0).is_empty());
        let d = BraidWord::delta2k(1);
        assert_eq!(d.letters(), &[1, 2, 1, 1, 2, 1]);
        assert_eq!(d.exponent_sum(), 6);
        let di = BraidWord::delta2k(-1);
        assert_eq!(di, d.inverse());
        assert_eq!(di.exponent_sum(), -6);
        assert_eq!(BraidWord::delta2k(3).len(), 18);
    }

    #[test]
    fn new_rejects_bad_letters() {
        assert!(BraidWord::new([1, 3]).is_err());
        assert!(BraidWord::new([0]).is_err());
        assert_eq!(BraidWord::new([1, -1, 2]).unwrap().letters(), &[2]);
    }

    fn letters(max: usize) -> impl Strategy<Value = Vec<i8>> {
        prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2]), 0..=max)
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(ls in letters(200)) {
            let x = BraidWord::new(ls).unwrap();
            prop_assert_eq!(BraidWord::parse(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn always_freely_reduced(ls in letters(60)) {
            let x = BraidWord::new(ls).unwrap();
            prop_assert!(x.letters().windows(2).all(|p| p[0] != -p[1]));
        }

        #[test]
        fn exponent_sum_laws(a in letters(30), b in letters(30), n in -4i64..=4) {
            let a = BraidWord::new(a).unwrap();
            let b = BraidWord::new(b).unwrap();
            prop_assert_eq!(a.concat(&b).exponent_sum(), a.exponent_sum() + b.exponent_sum());
            prop_assert_eq!(a.power(n).exponent_sum(), n * a.exponent_sum());
            prop_assert_eq!(a.inverse().exponent_sum(), -a.exponent_sum());
        }
    }
}
