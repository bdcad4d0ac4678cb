//! Geometric intersection numbers of braid images of `y_i` with the three
//! arcs `α1, α2, α3`, read off the unreduced Burau columns.
//!
//! For a column `(p1, p2, p3)`, set `Q = p1 - t p2`, `R = p2 - t p3` and
//! `S = p1 - t² p3`. The intersection numbers with `α1, α2, α3` are
//! `|Q(-1)|, |R(-1)|, |S(-1)|`.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::burau::burau_unreduced;
use crate::error::{Error, Result};
use crate::freegroup::Column;
use crate::laurent::LaurentPoly;

/// `(Q, R, S)` for one column.
pub fn qrs(col: &Column) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
    let [p1, p2, p3] = col;
    (p1 - &p2.shift(1), p2 - &p3.shift(1), p1 - &p3.shift(2))
}

/// Which of the three sums holds in a row. When several hold (a row with a
/// zero entry) the first in the order below is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TriangleCase {
    /// `a = b + c`
    AIsSum,
    /// `b = a + c`
    BIsSum,
    /// `c = a + b`
    CIsSum,
}

impl TriangleCase {
    pub fn of(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<Self> {
        if *a == b + c {
            Some(TriangleCase::AIsSum)
        } else if *b == a + c {
            Some(TriangleCase::BIsSum)
        } else if *c == a + b {
            Some(TriangleCase::CIsSum)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntersectionRow {
    #[serde(serialize_with = "ser_big")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub b: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub c: BigInt,
    pub q: LaurentPoly,
    pub r: LaurentPoly,
    pub s: LaurentPoly,
    pub case: TriangleCase,
}

fn ser_big<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl IntersectionRow {
    /// Row data for the loop whose Fox column is `col`. `row` is 1-based and
    /// only used in the error.
    pub fn from_column(col: &Column, row: usize) -> Result<Self> {
        let (q, r, s) = qrs(col);
        let (a, b, c) = (q.eval_neg_one().abs(), r.eval_neg_one().abs(), s.eval_neg_one().abs());
        let case = TriangleCase::of(&a, &b, &c).ok_or_else(|| Error::TriangleViolation {
            row,
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
        })?;
        Ok(Self { a, b, c, q, r, s, case })
    }

    pub fn triple(&self) -> [BigInt; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

/// Rows indexed by generator `y1, y2, y3`; columns by arc `α1, α2, α3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntersectionTable {
    pub rows: [IntersectionRow; 3],
}

impl IntersectionTable {
    pub fn numbers(&self) -> [[BigInt; 3]; 3] {
        [self.rows[0].triple(), self.rows[1].triple(), self.rows[2].triple()]
    }

    /// Same numbers, ignoring the intermediate polynomials.
    pub fn same_numbers(&self, other: &Self) -> bool {
        self.numbers() == other.numbers()
    }
}

pub fn intersection_table(w: &BraidWord) -> Result<IntersectionTable> {
    let m = burau_unreduced(w);
    let row = |i: usize| IntersectionRow::from_column(&m.column(i), i + 1);
    Ok(IntersectionTable {
        rows: [row(0)?, row(1)?, row(2)?],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::{artin_apply, fox_column, FreeWord, Generator};
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn small(t: &IntersectionTable) -> Vec<Vec<i64>> {
        t.numbers()
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn qrs_examples() {
        let z = LaurentPoly::zero;
        assert_eq!(qrs(&[z(), p("1"), z()]), (p("-t"), p("1"), z()));
        assert_eq!(qrs(&[p("1"), z(), z()]), (p("1"), z(), p("1")));
        assert_eq!(qrs(&[p("t"), p("1 - t"), z()]), (p("t^2"), p("1 - t"), p("t")));
    }

    #[test]
    fn calibration_tables() {
        let id = intersection_table(&BraidWord::identity()).unwrap();
        assert_eq!(small(&id), vec![vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
        let s1 = intersection_table(&BraidWord::parse("1").unwrap()).unwrap();
        assert_eq!(small(&s1), vec![vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]);
        assert_eq!(s1.rows[1].case, TriangleCase::BIsSum);
    }

    fn braid(max: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2]), 0..=max)
            .prop_map(|v| BraidWord::new(v).unwrap())
    }

    fn any_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..=6, -9i64..=9), 0..5).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        // Q(-1) = R(-1) + S(-1) identically, so the check cannot fail even
        // off the image of the braid group.
        #[test]
        fn triangle_holds_for_any_column(p1 in any_poly(), p2 in any_poly(), p3 in any_poly()) {
            prop_assert!(IntersectionRow::from_column(&[p1, p2, p3], 1).is_ok());
        }

        #[test]
        fn no_cancellation(w in braid(25)) {
            let t = intersection_table(&w).unwrap();
            for row in &t.rows {
                prop_assert_eq!(row.q.eval_neg_one().abs(), row.q.abs_coeff_sum());
                prop_assert_eq!(row.r.eval_neg_one().abs(), row.r.abs_coeff_sum());
                prop_assert_eq!(row.s.eval_neg_one().abs(), row.s.abs_coeff_sum());
            }
        }

        #[test]
        fn twist_invariance(w in braid(20), k in -2i64..=2) {
            let a = intersection_table(&w).unwrap();
            let b = intersection_table(&BraidWord::delta2k(k).concat(&w)).unwrap();
            prop_assert!(a.same_numbers(&b));
        }

        #[test]
        fn rows_agree_with_fox_columns(w in braid(15)) {
            let t = intersection_table(&w).unwrap();
            for g in Generator::ALL {
                let img = artin_apply(&w, &FreeWord::generator(g));
                let row = IntersectionRow::from_column(&fox_column(&img), g.index()).unwrap();
                prop_assert_eq!(&row, &t.rows[g.index() - 1]);
            }
        }
    }
}
