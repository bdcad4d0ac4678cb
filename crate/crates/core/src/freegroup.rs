//! The free group on `y1, y2, y3`, the fundamental group of the
//! three-punctured disk, with the Artin action of braids and abelianized
//! Fox derivatives.
//!
//! `σ_i` sends `y_i ↦ y_{i+1}` and `y_{i+1} ↦ y_{i+1} y_i y_{i+1}⁻¹`;
//! `σ_i⁻¹` sends `y_{i+1} ↦ y_i` and `y_i ↦ y_i⁻¹ y_{i+1} y_i`. Both fix the
//! boundary loop `z = y3 y2 y1`, and `Δ²` acts as conjugation by `z`.

use std::fmt;

use num_bigint::BigInt;

use crate::braid::BraidWord;
use crate::error::ParseError;
use crate::laurent::LaurentPoly;

/// One of the three free generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Y1,
    Y2,
    Y3,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::Y1, Generator::Y2, Generator::Y3];

    /// 1-based index.
    pub fn index(self) -> usize {
        match self {
            Generator::Y1 => 1,
            Generator::Y2 => 2,
            Generator::Y3 => 3,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            1 => Some(Generator::Y1),
            2 => Some(Generator::Y2),
            3 => Some(Generator::Y3),
            _ => None,
        }
    }
}

impl serde::Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y{}", self.index())
    }
}

/// A freely reduced word in `y1^±1, y2^±1, y3^±1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<i8>,
}

fn push_reduced(out: &mut Vec<i8>, x: i8) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        Self {
            letters: vec![g.index() as i8],
        }
    }

    /// The boundary loop `z = y3 y2 y1`.
    pub fn z() -> Self {
        Self { letters: vec![3, 2, 1] }
    }

    /// Validates letters (each in `{±1, ±2, ±3}`) and freely reduces.
    pub fn new(letters: impl IntoIterator<Item = i8>) -> Result<Self, ParseError> {
        let mut out = Vec::new();
        for (pos, x) in letters.into_iter().enumerate() {
            if !(1..=3).contains(&x.unsigned_abs()) {
                return Err(ParseError::new(pos, format!("y{x} is not a generator")));
            }
            push_reduced(&mut out, x);
        }
        Ok(Self { letters: out })
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

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&x| x.signum() as i64).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.letters.clone();
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

    /// True iff the word equals `z^n` for some integer `n` (including the
    /// identity). These are exactly the loops fixed by `Δ²`.
    pub fn is_boundary_power(&self) -> bool {
        let l = &self.letters;
        if !l.len().is_multiple_of(3) {
            return false;
        }
        let unit: [i8; 3] = match l.first() {
            None => return true,
            Some(x) if *x > 0 => [3, 2, 1],
            Some(_) => [-1, -2, -3],
        };
        l.chunks(3).all(|c| c == unit)
    }
}

/// `y1 y2^-1 y3^2`; runs of one letter are collapsed into a power and the
/// identity renders as `1`.
impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let x = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == x {
                j += 1;
            }
            let n = (j - i) as i64 * x.signum() as i64;
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if n == 1 {
                write!(f, "y{}", x.abs())?;
            } else {
                write!(f, "y{}^{}", x.abs(), n)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Parses the `Display` form: space-separated `y<i>` or `y<i>^<n>`, or `1`.
impl std::str::FromStr for FreeWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut out = Vec::new();
        let mut offset = 0;
        for tok in s.split(' ') {
            let at = offset;
            offset += tok.len() + 1;
            if tok.is_empty() || tok == "1" {
                continue;
            }
            let body = tok
                .strip_prefix('y')
                .ok_or_else(|| ParseError::new(at, "expected 'y<i>'"))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| ParseError::new(at, "bad exponent"))?),
                None => (body, 1),
            };
            let g = match idx {
                "1" => 1i8,
                "2" => 2,
                "3" => 3,
                _ => return Err(ParseError::new(at, format!("y{idx} is not a generator"))),
            };
            if exp.unsigned_abs() > crate::braid::MAX_PARSED_LETTERS as u64 {
                return Err(ParseError::new(at, "exponent too large"));
            }
            for _ in 0..exp.unsigned_abs() {
                push_reduced(&mut out, if exp > 0 { g } else { -g });
            }
        }
        Ok(Self { letters: out })
    }
}

/// Image of the single letter `y` (signed index) under `σ^s`.
fn letter_image(s: i8, y: i8) -> ([i8; 3], usize) {
    let i = s.abs();
    let a = y.abs();
    let (img, n): ([i8; 3], usize) = if s > 0 {
        if a == i {
            ([i + 1, 0, 0], 1)
        } else if a == i + 1 {
            ([i + 1, i, -(i + 1)], 3)
        } else {
            ([a, 0, 0], 1)
        }
    } else if a == i + 1 {
        ([i, 0, 0], 1)
    } else if a == i {
        ([-i, i + 1, i], 3)
    } else {
        ([a, 0, 0], 1)
    };
    if y > 0 {
        (img, n)
    } else {
        let mut inv = [0i8; 3];
        for k in 0..n {
            inv[k] = -img[n - 1 - k];
        }
        (inv, n)
    }
}

fn apply_letter(s: i8, u: &[i8], cap: usize) -> Option<Vec<i8>> {
    let mut out = Vec::with_capacity(u.len() + u.len() / 2 + 2);
    for &y in u {
        let (img, n) = letter_image(s, y);
        for &x in &img[..n] {
            push_reduced(&mut out, x);
        }
        if out.len() > cap {
            return None;
        }
    }
    Some(out)
}

/// Applies the automorphism of `w` to `u`, rightmost braid letter first.
pub fn artin_apply(w: &BraidWord, u: &FreeWord) -> FreeWord {
    artin_apply_bounded(w, u, usize::MAX).expect("unbounded application cannot overflow")
}

/// As [`artin_apply`], but gives up (returns `None`) as soon as an
/// intermediate word exceeds `cap` letters.
pub fn artin_apply_bounded(w: &BraidWord, u: &FreeWord, cap: usize) -> Option<FreeWord> {
    let mut cur = u.letters.clone();
    if cur.len() > cap {
        return None;
    }
    for &s in w.letters().iter().rev() {
        cur = apply_letter(s, &cur, cap)?;
    }
    Some(FreeWord { letters: cur })
}

/// `z^k u z^-k` with `z = y3 y2 y1`; agrees with applying `Δ^{2k}`.
pub fn delta2_conjugate(u: &FreeWord, k: i64) -> FreeWord {
    let zk = FreeWord::z().power(k);
    zk.concat(u).concat(&zk.inverse())
}

/// A column of three Laurent polynomials, indexed by generator.
pub type Column = [LaurentPoly; 3];

/// Abelianized Fox derivatives `(∂u/∂y1, ∂u/∂y2, ∂u/∂y3)` with every `y_i`
/// sent to `t`.
///
/// A letter `y_j` read at running exponent sum `ℓ` contributes `+t^ℓ` to
/// entry `j`; a letter `y_j⁻¹` contributes `-t^{ℓ-1}`.
pub fn fox_column(u: &FreeWord) -> Column {
    let mut level: i64 = 0;
    let (mut lo, mut hi) = (0i64, 0i64);
    for &y in &u.letters {
        level += y.signum() as i64;
        lo = lo.min(level);
        hi = hi.max(level);
    }
    let width = (hi - lo + 1) as usize;
    let mut dense = [vec![0i64; width], vec![0i64; width], vec![0i64; width]];
    level = 0;
    for &y in &u.letters {
        let j = (y.unsigned_abs() - 1) as usize;
        if y > 0 {
            dense[j][(level - lo) as usize] += 1;
            level += 1;
        } else {
            level -= 1;
            dense[j][(level - lo) as usize] -= 1;
        }
    }
    dense.map(|d| LaurentPoly::from_dense(lo, d.into_iter().map(BigInt::from).collect()))
}
