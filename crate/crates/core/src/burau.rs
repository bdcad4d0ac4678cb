//! Unreduced (3×3) and reduced (2×2) Burau matrices over `Z[t, t^-1]`, and
//! the specialization to `SL2(Z)` at `t = -1`.
//!
//! The matrix of a word is the product of its letters' matrices with the
//! leftmost letter leftmost. Column `i` of the unreduced matrix is the Fox
//! column of the image of `y_i`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::braid::BraidWord;
use crate::freegroup::Column;
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BurauKind {
    Unreduced,
    Reduced,
}

impl BurauKind {
    pub fn dim(self) -> usize {
        match self {
            BurauKind::Unreduced => 3,
            BurauKind::Reduced => 2,
        }
    }
}

/// A square matrix over Laurent polynomials, tagged with its representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    kind: BurauKind,
    /// Row-major.
    entries: Vec<LaurentPoly>,
}

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

impl BurauMatrix {
    pub fn identity(kind: BurauKind) -> Self {
        let n = kind.dim();
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { LaurentPoly::one() } else { LaurentPoly::zero() })
            .collect();
        Self { kind, entries }
    }

    /// Builds a matrix from rows; panics if the shape does not match `kind`.
    pub fn from_rows(kind: BurauKind, rows: Vec<Vec<LaurentPoly>>) -> Self {
        let n = kind.dim();
        assert_eq!(rows.len(), n);
        assert!(rows.iter().all(|r| r.len() == n));
        Self {
            kind,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// The matrix of a single letter.
    pub fn generator(kind: BurauKind, letter: i8) -> Self {
        let o = || lp(&[(0, 1)]);
        let z = LaurentPoly::zero;
        let rows = match (kind, letter) {
            (BurauKind::Unreduced, 1) => vec![
                vec![z(), lp(&[(1, 1)]), z()],
                vec![o(), lp(&[(0, 1), (1, -1)]), z()],
                vec![z(), z(), o()],
            ],
            (BurauKind::Unreduced, 2) => vec![
                vec![o(), z(), z()],
                vec![z(), z(), lp(&[(1, 1)])],
                vec![z(), o(), lp(&[(0, 1), (1, -1)])],
            ],
            (BurauKind::Unreduced, -1) => vec![
                vec![lp(&[(0, 1), (-1, -1)]), o(), z()],
                vec![lp(&[(-1, 1)]), z(), z()],
                vec![z(), z(), o()],
            ],
            (BurauKind::Unreduced, -2) => vec![
                vec![o(), z(), z()],
                vec![z(), lp(&[(0, 1), (-1, -1)]), o()],
                vec![z(), lp(&[(-1, 1)]), z()],
            ],
            (BurauKind::Reduced, 1) => vec![vec![lp(&[(1, -1)]), o()], vec![z(), o()]],
            (BurauKind::Reduced, 2) => vec![vec![o(), z()], vec![lp(&[(1, 1)]), lp(&[(1, -1)])]],
            (BurauKind::Reduced, -1) => vec![vec![lp(&[(-1, -1)]), lp(&[(-1, 1)])], vec![z(), o()]],
            (BurauKind::Reduced, -2) => vec![vec![o(), z()], vec![o(), lp(&[(-1, -1)])]],
            (_, x) => panic!("{x} is not a B3 letter"),
        };
        Self::from_rows(kind, rows)
    }

    pub fn kind(&self) -> BurauKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim() + col]
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.entries.chunks(self.dim()).map(|r| r.to_vec()).collect()
    }

    /// 0-based column of a 3×3 matrix.
    pub fn column(&self, col: usize) -> Column {
        assert_eq!(self.kind, BurauKind::Unreduced, "columns are indexed by generators");
        [self.entry(0, col).clone(), self.entry(1, col).clone(), self.entry(2, col).clone()]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.kind, rhs.kind, "cannot multiply reduced and unreduced matrices");
        let n = self.dim();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    let (a, b) = (self.entry(i, k), rhs.entry(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Self { kind: self.kind, entries }
    }

    /// Matrix-vector product; 3×3 only.
    pub fn apply(&self, c: &Column) -> Column {
        assert_eq!(self.kind, BurauKind::Unreduced);
        let row = |i: usize| {
            let mut acc = LaurentPoly::zero();
            for (k, ck) in c.iter().enumerate() {
                let a = self.entry(i, k);
                if !a.is_zero() && !ck.is_zero() {
                    acc += &(a * ck);
                }
            }
            acc
        };
        [row(0), row(1), row(2)]
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.kind);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for i in 0..self.dim() {
            acc += self.entry(i, i);
        }
        acc
    }

    pub fn det(&self) -> LaurentPoly {
        let e = |i, j| self.entry(i, j);
        match self.kind {
            BurauKind::Reduced => e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0),
            BurauKind::Unreduced => {
                let minor = |a: usize, b: usize, c: usize, d: usize| e(1, a) * e(2, b) - e(1, c) * e(2, d);
                e(0, 0) * minor(1, 2, 2, 1) - e(0, 1) * minor(0, 2, 2, 0) + e(0, 2) * minor(0, 1, 1, 0)
            }
        }
    }

    /// Evaluates every entry at `t = -1`; reduced matrices only.
    pub fn eval_neg_one(&self) -> IntMatrix2 {
        assert_eq!(self.kind, BurauKind::Reduced);
        IntMatrix2::new(
            self.entry(0, 0).eval_neg_one(),
            self.entry(0, 1).eval_neg_one(),
            self.entry(1, 0).eval_neg_one(),
            self.entry(1, 1).eval_neg_one(),
        )
    }

    /// `Some(k)` when the matrix is `t^k · I`.
    pub fn as_scalar_monomial(&self) -> Option<i64> {
        let (c, k) = self.entry(0, 0).as_monomial()?;
        if !c.is_one() {
            return None;
        }
        let expected = LaurentPoly::monomial(1, k);
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ok = if i == j { *self.entry(i, j) == expected } else { self.entry(i, j).is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(k)
    }
}

/// Rows, one per line, entries separated by ` | `.
impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.dim()).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            write!(f, "[ {} ]", cells.join(" | "))?;
        }
        Ok(())
    }
}

impl Serialize for BurauMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

/// The 3×3 unreduced Burau matrix.
pub fn burau_unreduced(w: &BraidWord) -> BurauMatrix {
    product(BurauKind::Unreduced, w)
}

/// The 2×2 reduced Burau matrix.
pub fn burau_reduced(w: &BraidWord) -> BurauMatrix {
    product(BurauKind::Reduced, w)
}

fn product(kind: BurauKind, w: &BraidWord) -> BurauMatrix {
    let gens: Vec<BurauMatrix> = [1i8, -1, 2, -2].iter().map(|&x| BurauMatrix::generator(kind, x)).collect();
    let pick = |x: i8| match x {
        1 => &gens[0],
        -1 => &gens[1],
        2 => &gens[2],
        _ => &gens[3],
    };
    w.letters()
        .iter()
        .fold(BurauMatrix::identity(kind), |acc, &x| acc.mul(pick(x)))
}

/// The unreduced matrix of `Δ²`.
pub fn delta2_matrix() -> BurauMatrix {
    burau_unreduced(&BraidWord::delta2k(1))
}

/// The unreduced matrix of `Δ^{-2}`.
pub fn delta2_inverse_matrix() -> BurauMatrix {
    burau_unreduced(&BraidWord::delta2k(-1))
}

/// An integer 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntMatrix2 {
    #[serde(serialize_with = "ser_bigints")]
    entries: [BigInt; 4],
}

fn ser_bigints<S: serde::Serializer>(e: &[BigInt; 4], s: S) -> Result<S::Ok, S::Error> {
    [[e[0].to_string(), e[1].to_string()], [e[2].to_string(), e[3].to_string()]].serialize(s)
}

impl IntMatrix2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        Self { entries: [a, b, c, d] }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    pub fn a(&self) -> &BigInt {
        &self.entries[0]
    }
    pub fn b(&self) -> &BigInt {
        &self.entries[1]
    }
    pub fn c(&self) -> &BigInt {
        &self.entries[2]
    }
    pub fn d(&self) -> &BigInt {
        &self.entries[3]
    }

    pub fn trace(&self) -> BigInt {
        self.a() + self.d()
    }

    pub fn det(&self) -> BigInt {
        self.a() * self.d() - self.b() * self.c()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.a() * o.a() + self.b() * o.c(),
            self.a() * o.b() + self.b() * o.d(),
            self.c() * o.a() + self.d() * o.c(),
            self.c() * o.b() + self.d() * o.d(),
        )
    }

    /// `gcd(b, c)`, with `gcd(0, 0) = 0`.
    pub fn off_diagonal_gcd(&self) -> BigInt {
        self.b().abs().gcd(&self.c().abs())
    }

    pub fn is_identity(&self) -> bool {
        self.a().is_one() && self.b().is_zero() && self.c().is_zero() && self.d().is_one()
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[ {} | {} ]\n[ {} | {} ]", self.a(), self.b(), self.c(), self.d())
    }
}

/// The image in `SL2(Z)`: the reduced matrix at `t = -1`, computed directly
/// as a product of integer matrices.
pub fn psi(w: &BraidWord) -> IntMatrix2 {
    let g = |x: i8| match x {
        1 => IntMatrix2::from_i64(1, 1, 0, 1),
        -1 => IntMatrix2::from_i64(1, -1, 0, 1),
        2 => IntMatrix2::from_i64(1, 0, -1, 1),
        _ => IntMatrix2::from_i64(1, 0, 1, 1),
    };
    w.letters().iter().fold(IntMatrix2::identity(), |acc, &x| acc.mul(&g(x)))
}

/// `(-t)^e` as a Laurent polynomial.
pub fn neg_t_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(if e.rem_euclid(2) == 0 { 1 } else { -1 }, e)
}
