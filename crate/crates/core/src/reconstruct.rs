//! Minimal-twist representatives of generator images and the general
//! veering verdict.
//!
//! For each generator, `β(y_i) = Δ^{2k_i}(y_i′)` where `y_i′` has the same
//! intersection numbers as `β(y_i)`, lies right of or on `y_i`, and
//! `Δ^{-2}(y_i′)` lies left of `y_i`. The image moves right exactly when
//! `k_i ≥ 0`.
//!
//! Short images are normalized directly in the free group. When an image
//! would exceed the letter budget, its side and `k_i` come from handle
//! reduction instead and `y_i′` is not materialized.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::burau::{burau_unreduced, delta2_inverse_matrix, delta2_matrix, BurauMatrix};
use crate::classify::{thurston_type, ThurstonType, Veering};
use crate::error::{Error, Result};
use crate::freegroup::{artin_apply, artin_apply_bounded, delta2_conjugate, fox_column, Column, FreeWord, Generator};
use crate::handle::{generator_side, translation_number, twist_count};
use crate::intersect::{intersection_table, IntersectionRow, IntersectionTable, TriangleCase};
use crate::sidedness::{compare, Side};

/// Layout of the triangle inside the disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum InsideConfig {
    Generic,
    /// The row is that of a generator: the curve is a twisted copy of it.
    Degenerate(Generator),
}

/// Which of the two summands is larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OutsideConfig {
    FirstLarger,
    SecondLarger,
    Balanced,
}

fn ser_big<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Train-track weights of one intersection row.
///
/// With the row `(a, b, c)`, the inside weights are `u = (a+b-c)/2`,
/// `v = (b+c-a)/2`, `w = (a+c-b)/2`. If `x, y` are the two summands and
/// `big = x + y`, the outside branch weights are `m1 = min(x, y)`,
/// `m2 = |x - y|`, `m3 = big - m2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TrainTrackConfig {
    pub case: TriangleCase,
    pub inside: InsideConfig,
    pub outside: OutsideConfig,
    #[serde(serialize_with = "ser_big")]
    pub u: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub v: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub w: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub m1: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub m2: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub m3: BigInt,
}

const GENERATOR_ROWS: [(Generator, [i64; 3]); 3] = [
    (Generator::Y1, [1, 0, 1]),
    (Generator::Y2, [1, 1, 0]),
    (Generator::Y3, [0, 1, 1]),
];

impl TrainTrackConfig {
    pub fn from_row(row: &IntersectionRow) -> Result<Self> {
        let (a, b, c) = (&row.a, &row.b, &row.c);
        let bad = |what: &str| Error::InternalInconsistency(format!("train track for ({a}, {b}, {c}): {what}"));
        let two = BigInt::from(2);
        let half = |x: BigInt| -> Result<BigInt> {
            if (&x % &two).is_zero() && !x.is_negative() {
                Ok(x / &two)
            } else {
                Err(bad("inside weight is not a nonnegative integer"))
            }
        };
        let u = half(a + b - c)?;
        let v = half(b + c - a)?;
        let w = half(a + c - b)?;
        if !(u.is_zero() || v.is_zero() || w.is_zero()) {
            return Err(bad("no inside weight vanishes"));
        }
        let (x, y, big) = match row.case {
            TriangleCase::AIsSum => (b, c, a),
            TriangleCase::BIsSum => (a, c, b),
            TriangleCase::CIsSum => (a, b, c),
        };
        let outside = match x.cmp(y) {
            std::cmp::Ordering::Greater => OutsideConfig::FirstLarger,
            std::cmp::Ordering::Less => OutsideConfig::SecondLarger,
            std::cmp::Ordering::Equal => OutsideConfig::Balanced,
        };
        let m1 = x.min(y).clone();
        let m2 = (x - y).abs();
        let m3 = big - &m2;
        if &m1 + &m2 != *x.max(y) || &m2 + &m3 != *big || m3.is_negative() {
            return Err(bad("branch weights do not balance"));
        }
        let triple = row.triple();
        let inside = GENERATOR_ROWS
            .iter()
            .find(|(_, r)| r.iter().zip(&triple).all(|(p, q)| BigInt::from(*p) == *q))
            .map_or(InsideConfig::Generic, |(g, _)| InsideConfig::Degenerate(*g));
        Ok(Self { case: row.case, inside, outside, u, v, w, m1, m2, m3 })
    }
}

/// How a generator's side and twisting were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    LoopNormalization,
    HandleReduction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorReconstruction {
    pub generator: Generator,
    /// The minimal-twist representative; absent on the handle route.
    #[serde(serialize_with = "ser_loop")]
    pub y_prime: Option<FreeWord>,
    pub k: i64,
    /// Side of `β(y_i)` relative to `y_i`.
    pub side: Side,
    pub config: TrainTrackConfig,
    pub route: Route,
}

fn ser_loop<S: Serializer>(x: &Option<FreeWord>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(u) => s.collect_str(u),
        None => s.serialize_none(),
    }
}

/// The unique `k` with `target = M(Δ²)^k · base`.
///
/// Each full twist moves the top degree of a column up by 3 (and the bottom
/// degree down by 3 for negative twists), which locates `k` to within a
/// couple of steps; the answer is then found by multiplying `base` by
/// successive powers of `M(Δ²)^{±1}` and comparing exactly.
pub fn extract_k(target: &Column, base: &Column) -> Result<i64> {
    if target == base {
        return Ok(0);
    }
    let max_deg = |c: &Column| c.iter().filter_map(|p| p.max_degree()).max();
    let min_deg = |c: &Column| c.iter().filter_map(|p| p.min_degree()).min();
    let (Some(tmax), Some(bmax), Some(tmin), Some(bmin)) =
        (max_deg(target), max_deg(base), min_deg(target), min_deg(base))
    else {
        return Err(Error::ReconstructionMismatch("zero column".into()));
    };
    let up = (tmax - bmax).div_euclid(3);
    let down = (tmin - bmin).div_euclid(3);
    let guess = if up > 0 { up } else if down < 0 { down } else { 0 };
    let hi = (guess + 2).max(2);
    let lo = (guess - 2).min(-2);

    let d2 = delta2_matrix();
    let mut cur = base.clone();
    for j in 1..=hi {
        cur = d2.apply(&cur);
        if cur == *target {
            return Ok(j);
        }
    }
    let d2i = delta2_inverse_matrix();
    let mut cur = base.clone();
    for j in 1..=-lo {
        cur = d2i.apply(&cur);
        if cur == *target {
            return Ok(-j);
        }
    }
    Err(Error::ReconstructionMismatch(format!(
        "no power of M(Δ²) in [{lo}, {hi}] carries the base column to the target"
    )))
}

/// Slides `x` along its `Δ²`-orbit until it is right of or on `y` while its
/// `Δ^{-2}` image is left of `y`. Returns the representative and the number
/// of twists removed.
fn normalize(x: &FreeWord, y: &FreeWord) -> (FreeWord, i64) {
    let mut cur = x.clone();
    let mut j = 0;
    while compare(&cur, y) == Side::LeftOf {
        cur = delta2_conjugate(&cur, 1);
        j -= 1;
    }
    if cur == *y {
        return (cur, j);
    }
    loop {
        let next = delta2_conjugate(&cur, -1);
        if compare(&next, y) == Side::LeftOf {
            return (cur, j);
        }
        cur = next;
        j += 1;
        if cur == *y {
            return (cur, j);
        }
    }
}

/// Runs the loop-normalization route for one generator with every
/// consistency check, without a size limit.
pub fn reconstruct_generator(w: &BraidWord, g: Generator) -> Result<GeneratorReconstruction> {
    let m = burau_unreduced(w);
    let table = intersection_table(w)?;
    reconstruct_with(w, g, &m, &table, None)?
        .ok_or_else(|| Error::InternalInconsistency("unbounded reconstruction gave up".into()))
}

fn reconstruct_with(
    w: &BraidWord,
    g: Generator,
    m: &BurauMatrix,
    table: &IntersectionTable,
    budget: Option<usize>,
) -> Result<Option<GeneratorReconstruction>> {
    let i = g.index();
    let y = FreeWord::generator(g);
    let image = match budget {
        Some(cap) => match artin_apply_bounded(w, &y, cap) {
            Some(x) => x,
            None => return Ok(None),
        },
        None => artin_apply(w, &y),
    };
    let row = &table.rows[i - 1];
    let config = TrainTrackConfig::from_row(row)?;
    let side = compare(&image, &y);
    let (yp, k) = normalize(&image, &y);

    let mismatch = |what: String| Error::ReconstructionMismatch(format!("{g}: {what}"));
    if compare(&yp, &y) == Side::LeftOf {
        return Err(mismatch(format!("representative {yp} is left of {y}")));
    }
    if yp != y && compare(&delta2_conjugate(&yp, -1), &y) != Side::LeftOf {
        return Err(mismatch(format!("representative {yp} is not minimally twisted")));
    }
    if delta2_conjugate(&yp, k) != image {
        return Err(mismatch(format!("Δ^(2·{k})({yp}) is not the image")));
    }
    let base = fox_column(&yp);
    let own_row = IntersectionRow::from_column(&base, i)?;
    if own_row.triple() != row.triple() {
        return Err(mismatch(format!("representative {yp} has different intersection numbers")));
    }
    let kk = extract_k(&m.column(i - 1), &base)?;
    if kk != k {
        return Err(mismatch(format!("matrix twisting {kk} differs from loop twisting {k}")));
    }
    if let InsideConfig::Degenerate(h) = config.inside {
        let yh = FreeWord::generator(h);
        let n = extract_k(&base, &fox_column(&yh))?;
        if delta2_conjugate(&yh, n) != yp {
            return Err(mismatch(format!("degenerate row but {yp} is not a twisted {yh}")));
        }
    }
    check_side(g, side, k, image == y)?;
    Ok(Some(GeneratorReconstruction {
        generator: g,
        y_prime: Some(yp),
        k,
        side,
        config,
        route: Route::LoopNormalization,
    }))
}

fn check_side(g: Generator, side: Side, k: i64, fixed: bool) -> Result<()> {
    let ok = match side {
        Side::Equal => fixed && k == 0,
        Side::RightOf => k >= 0,
        Side::LeftOf => k < 0,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InternalInconsistency(format!("{g}: side {side} with twisting {k}")))
    }
}

fn reconstruct_by_handles(w: &BraidWord, g: Generator, table: &IntersectionTable) -> Result<GeneratorReconstruction> {
    let config = TrainTrackConfig::from_row(&table.rows[g.index() - 1])?;
    let side = generator_side(w, g);
    let k = twist_count(w, g);
    check_side(g, side, k, side == Side::Equal)?;
    Ok(GeneratorReconstruction {
        generator: g,
        y_prime: None,
        k,
        side,
        config,
        route: Route::HandleReduction,
    })
}

/// Largest intermediate loop the normalization route will build.
pub const DEFAULT_LETTER_BUDGET: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralVerdict {
    pub generators: Vec<GeneratorReconstruction>,
    /// All images right (or all left) of their generators.
    pub generator_verdict: Veering,
    /// Fractional Dehn twist coefficient, in full twists.
    #[serde(serialize_with = "ser_ratio")]
    pub translation_number: Ratio<i64>,
    pub verdict: Veering,
    /// The generator test said one thing and the translation number overrode
    /// it (a non-veering pseudo-Anosov braid that happens to move all three
    /// generators to one side).
    pub corrected: bool,
}

fn ser_ratio<S: Serializer>(x: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn from_sides(sides: &[Side]) -> Veering {
    if sides.iter().all(|&s| s == Side::Equal) {
        Veering::Both
    } else if sides.iter().all(|&s| s != Side::LeftOf) {
        Veering::Right
    } else if sides.iter().all(|&s| s != Side::RightOf) {
        Veering::Left
    } else {
        Veering::Neither
    }
}

pub fn general_veering(w: &BraidWord) -> Result<GeneralVerdict> {
    general_veering_with_budget(w, DEFAULT_LETTER_BUDGET)
}

/// As [`general_veering`]; generator images longer than `budget` letters go
/// through handle reduction.
pub fn general_veering_with_budget(w: &BraidWord, budget: usize) -> Result<GeneralVerdict> {
    let m = burau_unreduced(w);
    let table = intersection_table(w)?;
    let mut generators = Vec::with_capacity(3);
    for g in Generator::ALL {
        let r = match reconstruct_with(w, g, &m, &table, Some(budget))? {
            Some(r) => r,
            None => reconstruct_by_handles(w, g, &table)?,
        };
        generators.push(r);
    }
    let sides: Vec<Side> = generators.iter().map(|r| r.side).collect();
    let generator_verdict = from_sides(&sides);
    let tau = translation_number(w);
    let by_tau = if tau > Ratio::zero() {
        Some(Veering::Right)
    } else if tau < Ratio::zero() {
        Some(Veering::Left)
    } else {
        None
    };
    let verdict = match (by_tau, thurston_type(w)) {
        (Some(v), _) if v != generator_verdict => {
            return Err(Error::InternalInconsistency(format!(
                "translation number {tau} but the generators say {generator_verdict}"
            )))
        }
        (Some(v), _) => v,
        (None, ThurstonType::PseudoAnosov) => Veering::Neither,
        (None, _) => generator_verdict,
    };
    Ok(GeneralVerdict {
        generators,
        generator_verdict,
        translation_number: tau,
        corrected: verdict != generator_verdict,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{periodic_veering, reducible_outcome};
    use proptest::prelude::*;

    fn bw(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn reconstruct_examples() {
        for g in Generator::ALL {
            let r = reconstruct_generator(&bw(""), g).unwrap();
            assert_eq!((r.y_prime.clone(), r.k, r.side), (Some(FreeWord::generator(g)), 0, Side::Equal));
            let r = reconstruct_generator(&BraidWord::delta2k(1), g).unwrap();
            assert_eq!((r.y_prime.clone(), r.k, r.side), (Some(FreeWord::generator(g)), 1, Side::RightOf));
        }
        let r = reconstruct_generator(&bw("1"), Generator::Y1).unwrap();
        assert_eq!((r.y_prime, r.k), (Some(fw("y2")), 0));
    }

    #[test]
    fn extract_k_examples() {
        let base = fox_column(&fw("y2 y1^-1 y3"));
        assert_eq!(extract_k(&base, &base).unwrap(), 0);
        assert_eq!(extract_k(&delta2_matrix().apply(&base), &base).unwrap(), 1);
        let target = burau_unreduced(&bw("Delta^4 1")).column(0);
        assert_eq!(extract_k(&target, &fox_column(&fw("y2"))).unwrap(), 2);
        let far = burau_unreduced(&BraidWord::delta2k(-9)).column(1);
        assert_eq!(extract_k(&far, &fox_column(&fw("y2"))).unwrap(), -9);
        assert!(matches!(
            extract_k(&fox_column(&fw("y1")), &fox_column(&fw("y2"))),
            Err(Error::ReconstructionMismatch(_))
        ));
    }

    #[test]
    fn config_examples() {
        let t = intersection_table(&bw("1")).unwrap();
        let c = TrainTrackConfig::from_row(&t.rows[1]).unwrap();
        assert_eq!(c.case, TriangleCase::BIsSum);
        assert_eq!(c.inside, InsideConfig::Generic);
        assert_eq!(c.outside, OutsideConfig::Balanced);
        assert_eq!((c.m1, c.m2, c.m3), (1.into(), 0.into(), 2.into()));
        let c = TrainTrackConfig::from_row(&t.rows[0]).unwrap();
        assert_eq!(c.inside, InsideConfig::Degenerate(Generator::Y2));
    }

    #[test]
    fn general_examples() {
        assert_eq!(general_veering(&bw("1 2")).unwrap().verdict, Veering::Right);
        assert_eq!(general_veering(&bw("-2 -1")).unwrap().verdict, Veering::Left);
        let v = general_veering(&bw("1 -2")).unwrap();
        assert_eq!((v.verdict, v.corrected), (Veering::Neither, false));
        assert_eq!(general_veering(&bw("")).unwrap().verdict, Veering::Both);
        // A conjugate of σ1σ2⁻¹ that moves all three generators right.
        let v = general_veering(&bw("2 2 1 -2 -2 -2")).unwrap();
        assert_eq!(v.generator_verdict, Veering::Right);
        assert_eq!((v.verdict, v.corrected), (Veering::Neither, true));
    }

    #[test]
    fn routes_agree() {
        for s in ["1 -2 1 -2 2 2 -1 -1 2 1 -2", "Delta2 -1 2 -1 2", "2 -1 -1 2 2 1 -2 -1 -1 2"] {
            let w = bw(s);
            let a = general_veering_with_budget(&w, usize::MAX).unwrap();
            let b = general_veering_with_budget(&w, 0).unwrap();
            assert!(b.generators.iter().all(|r| r.route == Route::HandleReduction));
            for (x, y) in a.generators.iter().zip(&b.generators) {
                assert_eq!((x.k, x.side), (y.k, y.side));
            }
            assert_eq!(a.verdict, b.verdict);
        }
    }

    fn braid(max: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2]), 0..=max)
            .prop_map(|v| BraidWord::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn round_trip(w in braid(15)) {
            let m = burau_unreduced(&w);
            for g in Generator::ALL {
                let r = reconstruct_generator(&w, g).unwrap();
                let yp = r.y_prime.unwrap();
                let mut col = fox_column(&yp);
                let step = if r.k >= 0 { delta2_matrix() } else { delta2_inverse_matrix() };
                for _ in 0..r.k.abs() {
                    col = step.apply(&col);
                }
                prop_assert_eq!(m.column(g.index() - 1), col);
                prop_assert_eq!(artin_apply(&w, &FreeWord::generator(g)), delta2_conjugate(&yp, r.k));
            }
        }

        #[test]
        fn handle_route_matches_normalization(w in braid(12)) {
            let a = general_veering_with_budget(&w, usize::MAX).unwrap();
            let b = general_veering_with_budget(&w, 0).unwrap();
            for (x, y) in a.generators.iter().zip(&b.generators) {
                prop_assert_eq!((x.k, x.side), (y.k, y.side));
            }
        }

        #[test]
        fn twisted_words_differ_by_twist_powers(w in braid(12), k in -2i64..=2) {
            let a = intersection_table(&w).unwrap();
            let tw = BraidWord::delta2k(k).concat(&w);
            prop_assert!(a.same_numbers(&intersection_table(&tw).unwrap()));
            let (ma, mb) = (burau_unreduced(&w), burau_unreduced(&tw));
            for i in 0..3 {
                prop_assert_eq!(extract_k(&mb.column(i), &ma.column(i)).unwrap(), k);
            }
        }

        #[test]
        fn special_engines_agree(w in braid(12)) {
            let general = general_veering(&w).unwrap().verdict;
            match thurston_type(&w) {
                ThurstonType::Reducible => prop_assert_eq!(reducible_outcome(&w).unwrap().verdict, general),
                ThurstonType::Periodic => prop_assert_eq!(periodic_veering(&w).unwrap().verdict, general),
                ThurstonType::PseudoAnosov => {}
            }
        }

        #[test]
        fn conjugation_invariance(w in braid(8), t in braid(5)) {
            prop_assert_eq!(
                general_veering(&w.conjugate_by(&t)).unwrap().verdict,
                general_veering(&w).unwrap().verdict
            );
        }
    }
}
