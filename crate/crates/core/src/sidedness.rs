//! Right/left comparison of based loops in the three-punctured disk.
//!
//! Reduced words in `y1, y2, y3` are geodesic edge paths in the universal
//! cover of the three-petal rose, which is a tree. Two distinct loops are
//! compared at the vertex where their paths diverge, by the cyclic order of
//! direction germs around that vertex, read starting just after the germ the
//! common prefix arrived along (or after the boundary at the basepoint).

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freegroup::{delta2_conjugate, FreeWord, Generator};

/// A direction at the basepoint: one of the two boundary directions, or
/// leaving (`Out`) / entering (`In`) the petal of a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Germ {
    BoundaryRight,
    BoundaryLeft,
    Out(Generator),
    In(Generator),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    RightOf,
    LeftOf,
    Equal,
}

impl Side {
    pub fn reverse(self) -> Self {
        match self {
            Side::RightOf => Side::LeftOf,
            Side::LeftOf => Side::RightOf,
            Side::Equal => Side::Equal,
        }
    }

    /// `RightOf` as `Greater`.
    pub fn as_ordering(self) -> Ordering {
        match self {
            Side::RightOf => Ordering::Greater,
            Side::Equal => Ordering::Equal,
            Side::LeftOf => Ordering::Less,
        }
    }

    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Greater => Side::RightOf,
            Ordering::Equal => Side::Equal,
            Ordering::Less => Side::LeftOf,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::RightOf => "right",
            Side::LeftOf => "left",
            Side::Equal => "equal",
        })
    }
}

/// The counterclockwise order of the eight germs at the basepoint, starting
/// just after the boundary on the right and ending at the boundary on the
/// left.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GermOrder {
    germs: [Germ; 8],
}

use Generator::{Y1, Y2, Y3};

impl GermOrder {
    /// The orientation fixed by requiring `σ1(y1)` to lie right of `y1`.
    pub const CALIBRATED: GermOrder = GermOrder {
        germs: [
            Germ::BoundaryRight,
            Germ::Out(Y3),
            Germ::In(Y3),
            Germ::Out(Y2),
            Germ::In(Y2),
            Germ::Out(Y1),
            Germ::In(Y1),
            Germ::BoundaryLeft,
        ],
    };

    /// The opposite chirality.
    pub const MIRRORED: GermOrder = GermOrder {
        germs: [
            Germ::BoundaryRight,
            Germ::In(Y1),
            Germ::Out(Y1),
            Germ::In(Y2),
            Germ::Out(Y2),
            Germ::In(Y3),
            Germ::Out(Y3),
            Germ::BoundaryLeft,
        ],
    };

    pub fn germs(&self) -> &[Germ; 8] {
        &self.germs
    }

    /// Position on the 7-slot circle; both boundary germs share slot 0.
    fn slot(&self, g: Germ) -> usize {
        match g {
            Germ::BoundaryRight | Germ::BoundaryLeft => 0,
            _ => self.germs.iter().position(|&x| x == g).expect("germ is in the order"),
        }
    }

    /// Compares distinct or equal reduced loops under this order.
    pub fn compare(&self, u: &FreeWord, v: &FreeWord) -> Side {
        let (a, b) = (u.letters(), v.letters());
        let p = a.iter().zip(b).take_while(|(x, y)| x == y).count();
        if p == a.len() && p == b.len() {
            return Side::Equal;
        }
        let reference = if p == 0 { Germ::BoundaryRight } else { germ_in(a[p - 1]) };
        let ref_slot = self.slot(reference);
        let rank = |w: &[i8]| -> i64 {
            match w.get(p) {
                Some(&x) => ((self.slot(germ_out(x)) + 7 - ref_slot - 1) % 7) as i64,
                // A path ending at the root leaves along the boundary on the
                // right, before every petal.
                None if p == 0 => -1,
                None => ((7 - ref_slot - 1) % 7) as i64,
            }
        };
        if rank(a) < rank(b) {
            Side::RightOf
        } else {
            Side::LeftOf
        }
    }
}

fn gen_of(x: i8) -> Generator {
    Generator::from_index(x.unsigned_abs() as usize).expect("letter of a free word")
}

/// Germ used when a path leaves a vertex along letter `x`.
fn germ_out(x: i8) -> Germ {
    if x > 0 {
        Germ::Out(gen_of(x))
    } else {
        Germ::In(gen_of(x))
    }
}

/// Germ, at the far vertex, along which a path arrives after reading `x`.
fn germ_in(x: i8) -> Germ {
    if x > 0 {
        Germ::In(gen_of(x))
    } else {
        Germ::Out(gen_of(x))
    }
}

/// `u` relative to `v` under the calibrated order.
pub fn compare(u: &FreeWord, v: &FreeWord) -> Side {
    GermOrder::CALIBRATED.compare(u, v)
}

/// Checks that a positive boundary twist moves `u` right and a negative one
/// moves it left.
pub fn twist_monotone(u: &FreeWord) -> Result<()> {
    if u.is_boundary_power() {
        return Err(Error::BoundaryClass);
    }
    let plus = compare(&delta2_conjugate(u, 1), u);
    let minus = compare(&delta2_conjugate(u, -1), u);
    if plus == Side::RightOf && minus == Side::LeftOf {
        Ok(())
    } else {
        Err(Error::InternalInconsistency(format!(
            "boundary twists of {u} compare as {plus} / {minus}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::freegroup::artin_apply;
    use proptest::prelude::*;

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn bw(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn anchors() {
        let y1 = fw("y1");
        assert_eq!(compare(&y1, &y1), Side::Equal);
        assert_eq!(compare(&artin_apply(&bw("1"), &y1), &y1), Side::RightOf);
        assert_eq!(compare(&artin_apply(&bw("-1"), &y1), &y1), Side::LeftOf);
    }

    #[test]
    fn mirrored_order_fails_anchors() {
        let y1 = fw("y1");
        let m = GermOrder::MIRRORED;
        let right = m.compare(&artin_apply(&bw("1"), &y1), &y1) == Side::RightOf;
        let left = m.compare(&artin_apply(&bw("-1"), &y1), &y1) == Side::LeftOf;
        assert!(!(right && left));
    }

    #[test]
    fn twist_examples() {
        assert!(twist_monotone(&fw("y1")).is_ok());
        assert!(twist_monotone(&fw("y2^-1")).is_ok());
        assert_eq!(twist_monotone(&FreeWord::z()), Err(Error::BoundaryClass));
        assert_eq!(twist_monotone(&FreeWord::identity()), Err(Error::BoundaryClass));
        assert_eq!(compare(&delta2_conjugate(&FreeWord::z(), 1), &FreeWord::z()), Side::Equal);
    }

    #[test]
    fn trivial_loop_is_right_of_everything() {
        assert_eq!(compare(&fw("y2"), &FreeWord::identity()), Side::LeftOf);
        assert_eq!(compare(&FreeWord::identity(), &fw("y3^-1")), Side::RightOf);
    }

    fn free(max: usize) -> impl Strategy<Value = FreeWord> {
        prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2, 3, -3]), 0..=max)
            .prop_map(|v| FreeWord::new(v).unwrap())
    }

    fn braid(max: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2]), 0..=max)
            .prop_map(|v| BraidWord::new(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn total_order(u in free(10), v in free(10), w in free(10)) {
            let uv = compare(&u, &v);
            prop_assert_eq!(uv == Side::Equal, u == v);
            prop_assert_eq!(compare(&v, &u), uv.reverse());
            if uv == Side::RightOf && compare(&v, &w) == Side::RightOf {
                prop_assert_eq!(compare(&u, &w), Side::RightOf);
            }
        }
    }

    proptest! {
        #[test]
        fn braid_action_preserves_order(u in free(8), v in free(8), b in braid(6)) {
            prop_assert_eq!(
                compare(&artin_apply(&b, &u), &artin_apply(&b, &v)),
                compare(&u, &v)
            );
        }

        #[test]
        fn twisting_preserves_order(u in free(8), v in free(8), k in -3i64..=3) {
            prop_assert_eq!(
                compare(&delta2_conjugate(&u, k), &delta2_conjugate(&v, k)),
                compare(&u, &v)
            );
        }

        #[test]
        fn positive_braids_move_loops_right(
            ls in prop::collection::vec(prop::sample::select(vec![1i8, 2]), 1..=8),
            u in free(6),
        ) {
            let b = BraidWord::new(ls).unwrap();
            prop_assert_ne!(compare(&artin_apply(&b, &u), &u), Side::LeftOf);
        }

        #[test]
        fn twists_are_monotone(u in free(10)) {
            match twist_monotone(&u) {
                Ok(()) => prop_assert!(!u.is_boundary_power()),
                Err(e) => {
                    prop_assert_eq!(e, Error::BoundaryClass);
                    prop_assert!(u.is_boundary_power());
                }
            }
        }
    }
}
