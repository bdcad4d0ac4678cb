//! Exact Laurent polynomials over the integers, the ring `Z[t, t^-1]` in
//! which every Burau entry lives.
//!
//! Values are stored as a sorted sparse list of `(exponent, coefficient)`
//! pairs with no zero coefficients, so structural equality is ring equality.
//! Coefficients are arbitrary precision.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

/// An element of `Z[t, t^-1]` in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    /// Ascending by exponent; no coefficient is zero.
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * t^e`; zero when `c == 0`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from arbitrary terms, merging repeated exponents
    /// and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        Self::from_sorted_map(acc)
    }

    fn from_sorted_map(map: BTreeMap<i64, BigInt>) -> Self {
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Builds a polynomial from a dense coefficient slice starting at `low`.
    pub(crate) fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (low + i as i64, c))
            .collect();
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        match self.terms.binary_search_by_key(&e, |(x, _)| *x) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The specialization `t = -1`, exact over the integers.
    pub fn eval_neg_one(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (e, c)| {
            if e.rem_euclid(2) == 0 {
                acc + c
            } else {
                acc - c
            }
        })
    }

    /// `Some((c, e))` iff the polynomial is exactly `c * t^e` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c.clone(), *e)),
            _ => None,
        }
    }

    /// Sum of the absolute values of the coefficients.
    pub fn abs_coeff_sum(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).sum()
    }

    fn add_scaled(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let low = self.terms[0].0 + other.terms[0].0;
        let high = self.terms[self.terms.len() - 1].0 + other.terms[other.terms.len() - 1].0;
        let span = (high - low + 1) as u128;
        let work = (self.terms.len() * other.terms.len()) as u128;
        if span <= 4 * work + 64 {
            let mut dense = vec![BigInt::zero(); span as usize];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    dense[(ea + eb - low) as usize] += ca * cb;
                }
            }
            Self::from_dense(low, dense)
        } else {
            let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    *acc.entry(ea + eb).or_default() += ca * cb;
                }
            }
            Self::from_sorted_map(acc)
        }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.add_scaled(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.add_scaled(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_scaled(rhs, false);
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

/// Renders as `a_e*t^e + ...` with exponents descending, e.g. `-t^3 + t^2`,
/// `1 + 2*t^-1`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if *e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed Laurent polynomial at byte {offset}: {message}")]
pub struct LaurentParseError {
    pub offset: usize,
    pub message: String,
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: &str) -> LaurentParseError {
        LaurentParseError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }
}

/// Parses the rendering produced by `Display` (and tolerates extra spaces).
impl FromStr for LaurentPoly {
    type Err = LaurentParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner { src: s.as_bytes(), pos: 0 };
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        let mut first = true;
        loop {
            sc.skip_ws();
            if sc.peek().is_none() {
                if first {
                    return Err(sc.err("empty input"));
                }
                break;
            }
            let mut negative = false;
            match sc.peek() {
                Some(b'+') if !first => sc.pos += 1,
                Some(b'-') => {
                    negative = true;
                    sc.pos += 1;
                }
                _ if !first => return Err(sc.err("expected '+' or '-'")),
                _ => {}
            }
            sc.skip_ws();
            let digits = sc.digits();
            let had_digits = digits.is_some();
            let coeff = match digits {
                Some(d) => {
                    let c: BigInt = d.parse().map_err(|_| sc.err("bad coefficient"))?;
                    if sc.peek() == Some(b'*') {
                        sc.pos += 1;
                        if sc.peek() != Some(b't') {
                            return Err(sc.err("expected 't' after '*'"));
                        }
                    }
                    c
                }
                None => BigInt::one(),
            };
            let exponent = if sc.peek() == Some(b't') {
                sc.pos += 1;
                if sc.peek() == Some(b'^') {
                    sc.pos += 1;
                    let neg_exp = sc.peek() == Some(b'-');
                    if neg_exp {
                        sc.pos += 1;
                    }
                    let d = sc.digits().ok_or_else(|| sc.err("expected exponent"))?;
                    let e: i64 = d.parse().map_err(|_| sc.err("exponent out of range"))?;
                    if neg_exp {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                }
            } else {
                if !had_digits {
                    return Err(sc.err("expected a term"));
                }
                0
            };
            terms.push((exponent, if negative { -coeff } else { coeff }));
            first = false;
        }
        Ok(Self::from_terms(terms))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
