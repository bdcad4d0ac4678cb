//! Nielsen–Thurston type from the trace of the `SL2(Z)` image, and veering
//! verdicts for reducible and periodic braids.
//!
//! A reducible braid is `Δ^{2k} τ σ1^m τ⁻¹`; `|m|` is the gcd of the
//! off-diagonal entries of its `SL2(Z)` image and `k` then follows from the
//! exponent sum `6k + m`. A periodic braid satisfies `M_r(β^12) = t^{6k} I`
//! with `k` its exponent sum.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::braid::BraidWord;
use crate::burau::{burau_reduced, psi, BurauMatrix, BurauKind, IntMatrix2};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThurstonType {
    Periodic,
    Reducible,
    PseudoAnosov,
}

impl fmt::Display for ThurstonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThurstonType::Periodic => "periodic",
            ThurstonType::Reducible => "reducible",
            ThurstonType::PseudoAnosov => "pseudo-Anosov",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Veering {
    Right,
    Left,
    /// Only the identity braid.
    Both,
    Neither,
}

impl fmt::Display for Veering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Veering::Right => "right-veering",
            Veering::Left => "left-veering",
            Veering::Both => "both",
            Veering::Neither => "neither",
        })
    }
}

/// Which engine produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ReducibleRule,
    PeriodicRule,
    GeneralRule,
    CrossChecked,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ReducibleRule => "reducible-rule",
            Method::PeriodicRule => "periodic-rule",
            Method::GeneralRule => "general-rule",
            Method::CrossChecked => "cross-checked",
        })
    }
}

fn type_of_trace(tr: &BigInt) -> ThurstonType {
    let two = BigInt::from(2);
    match tr.abs().cmp(&two) {
        std::cmp::Ordering::Less => ThurstonType::Periodic,
        std::cmp::Ordering::Equal => ThurstonType::Reducible,
        std::cmp::Ordering::Greater => ThurstonType::PseudoAnosov,
    }
}

pub fn thurston_type(w: &BraidWord) -> ThurstonType {
    type_of_trace(&psi(w).trace())
}

/// `β = Δ^{2k} τ σ1^m τ⁻¹` with `λ = ±1` the eigenvalue of its `SL2(Z)`
/// image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReducibleAnalysis {
    pub k: i64,
    pub m: i64,
    pub lambda: i8,
}

fn small(x: &BigInt, what: &str) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::InternalInconsistency(format!("{what} {x} does not fit in 64 bits")))
}

/// `t^{3k} + (-1)^m t^{3k+m}`.
pub fn reducible_trace(k: i64, m: i64) -> LaurentPoly {
    let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::monomial(1, 3 * k) + LaurentPoly::monomial(sign, 3 * k + m)
}

/// Recovers `(k, m, λ)` for a reducible braid and checks the trace identity.
pub fn analyze_reducible(w: &BraidWord) -> Result<ReducibleAnalysis> {
    let hat = psi(w);
    analyze_reducible_with(w, &hat, &burau_reduced(w))
}

fn analyze_reducible_with(w: &BraidWord, hat: &IntMatrix2, mr: &BurauMatrix) -> Result<ReducibleAnalysis> {
    let tr = hat.trace();
    if type_of_trace(&tr) != ThurstonType::Reducible {
        return Err(Error::Unsupported(format!("braid is not reducible (trace {tr})")));
    }
    let lambda: i8 = if tr.is_positive() { 1 } else { -1 };
    let g = small(&hat.off_diagonal_gcd(), "gcd")?;
    // The entry carrying the sign of m is (1,2) for λ = 1 and (2,1) for
    // λ = -1. It vanishes when the conjugator kills it; the other entry then
    // carries the sign with the opposite orientation.
    let (primary, secondary) = if lambda == 1 { (hat.b(), hat.c()) } else { (hat.c(), hat.b()) };
    let sign = match (primary.sign(), secondary.sign()) {
        (Sign::Plus, _) => 1,
        (Sign::Minus, _) => -1,
        (Sign::NoSign, Sign::Plus) => -1,
        (Sign::NoSign, Sign::Minus) => 1,
        (Sign::NoSign, Sign::NoSign) => 0,
    };
    let m = sign * g;
    let e = w.exponent_sum();
    if (e - m).rem_euclid(6) != 0 {
        return Err(Error::InternalInconsistency(format!(
            "exponent sum {e} minus m = {m} is not divisible by 6"
        )));
    }
    let k = (e - m) / 6;
    let expected = reducible_trace(k, m);
    let actual = mr.trace();
    if actual != expected {
        return Err(Error::InternalInconsistency(format!(
            "tr M_r = {actual}, expected t^(3k) + (-1)^m t^(3k+m) = {expected} for k = {k}, m = {m}"
        )));
    }
    if lambda as i64 != if k.rem_euclid(2) == 0 { 1 } else { -1 } {
        return Err(Error::InternalInconsistency(format!("eigenvalue {lambda} does not match k = {k}")));
    }
    Ok(ReducibleAnalysis { k, m, lambda })
}

/// Right iff `k > 0`, or `k = 0` and `m > 0`; the identity is `Both`;
/// everything else is `Left`.
pub fn reducible_veering(a: &ReducibleAnalysis) -> Veering {
    match (a.k.signum(), a.m.signum()) {
        (1, _) | (0, 1) => Veering::Right,
        (0, 0) => Veering::Both,
        _ => Veering::Left,
    }
}

/// Verdicts readable from the trace alone, without `m`'s sign. Returns
/// `None` when the trace is ambiguous.
pub fn reducible_trace_shortcut(trace: &LaurentPoly) -> Option<Veering> {
    let terms: Vec<(i64, i64)> = trace
        .terms()
        .iter()
        .map(|(e, c)| (*e, c.to_i64().unwrap_or(0)))
        .collect();
    let (d, r, minus) = match terms.as_slice() {
        [(d, 2)] => (*d, *d, false),
        [(x, 1), (y, 1)] => (*x, *y, false),
        [(x, -1), (y, 1)] => (*y, *x, true),
        [(x, 1), (y, -1)] => (*x, *y, true),
        _ => return None,
    };
    // t^d - t^r, or t^d + t^r with 3 ∤ r: d = 3k. Silent when d = 0, where
    // the verdict also depends on m.
    let lead = if minus || r.rem_euclid(3) != 0 {
        Some(d)
    } else if d.rem_euclid(3) != 0 {
        Some(r)
    } else {
        None
    };
    if let Some(d) = lead {
        match d.signum() {
            1 => return Some(Veering::Right),
            -1 => return Some(Veering::Left),
            _ => {}
        }
    }
    if !minus && (d, r) != (0, 0) {
        if d >= 0 && r >= 0 {
            return Some(Veering::Right);
        }
        if d <= 0 && r <= 0 {
            return Some(Veering::Left);
        }
    }
    None
}

/// Outcome of the reducible engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibleOutcome {
    pub analysis: ReducibleAnalysis,
    pub verdict: Veering,
    /// The trace-only verdict, when one applies.
    pub shortcut: Option<Veering>,
}

pub fn reducible_outcome(w: &BraidWord) -> Result<ReducibleOutcome> {
    let mr = burau_reduced(w);
    let analysis = analyze_reducible_with(w, &psi(w), &mr)?;
    let verdict = reducible_veering(&analysis);
    let shortcut = reducible_trace_shortcut(&mr.trace());
    if let Some(s) = shortcut {
        if s != verdict {
            return Err(Error::InternalInconsistency(format!(
                "trace shortcut gives {s} but k = {}, m = {} gives {verdict}",
                analysis.k, analysis.m
            )));
        }
    }
    Ok(ReducibleOutcome { analysis, verdict, shortcut })
}

/// Outcome of the periodic engine: `M_r(β^12) = t^{6k} I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicOutcome {
    pub k: i64,
    pub verdict: Veering,
}

pub fn periodic_veering(w: &BraidWord) -> Result<PeriodicOutcome> {
    let mr = burau_reduced(w);
    let identity = mr == BurauMatrix::identity(BurauKind::Reduced);
    if !identity && thurston_type(w) != ThurstonType::Periodic {
        return Err(Error::Unsupported("braid is not periodic".into()));
    }
    let p12 = mr.pow(12);
    let s = p12.as_scalar_monomial().ok_or_else(|| {
        Error::InternalInconsistency(format!("M_r(β^12) is not a monomial scalar matrix:\n{p12}"))
    })?;
    if s.rem_euclid(6) != 0 {
        return Err(Error::InternalInconsistency(format!("M_r(β^12) = t^{s} I with 6 ∤ {s}")));
    }
    let k = s / 6;
    if k != w.exponent_sum() {
        return Err(Error::InternalInconsistency(format!(
            "M_r(β^12) = t^(6·{k}) I but the exponent sum is {}",
            w.exponent_sum()
        )));
    }
    let verdict = match k.signum() {
        1 => Veering::Right,
        -1 => Veering::Left,
        _ if identity => Veering::Both,
        _ => {
            return Err(Error::InternalInconsistency(
                "β^12 is trivial but β is not; B3 has no torsion".into(),
            ))
        }
    };
    Ok(PeriodicOutcome { k, verdict })
}

/// Decided by faithfulness of the reduced representation.
pub fn is_identity(w: &BraidWord) -> bool {
    burau_reduced(w) == BurauMatrix::identity(BurauKind::Reduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    fn ra(k: i64, m: i64, lambda: i8) -> ReducibleAnalysis {
        ReducibleAnalysis { k, m, lambda }
    }

    #[test]
    fn types() {
        assert_eq!(thurston_type(&bw("1")), ThurstonType::Reducible);
        assert_eq!(thurston_type(&bw("1 2")), ThurstonType::Periodic);
        assert_eq!(thurston_type(&bw("1 -2")), ThurstonType::PseudoAnosov);
        assert_eq!(thurston_type(&bw("")), ThurstonType::Reducible);
        assert_eq!(thurston_type(&bw("Delta")), ThurstonType::Periodic);
    }

    #[test]
    fn reducible_examples() {
        assert_eq!(analyze_reducible(&bw("1")).unwrap(), ra(0, 1, 1));
        let w = bw("2 1 1 1 -2");
        assert_eq!(psi(&w), IntMatrix2::from_i64(4, 3, -3, -2));
        assert_eq!(analyze_reducible(&w).unwrap(), ra(0, 3, 1));
        assert_eq!(analyze_reducible(&BraidWord::delta2k(1)).unwrap(), ra(1, 0, -1));
        assert_eq!(analyze_reducible(&bw("")).unwrap(), ra(0, 0, 1));
        assert!(matches!(analyze_reducible(&bw("1 2")), Err(Error::Unsupported(_))));
    }

    #[test]
    fn reducible_rule() {
        assert_eq!(reducible_veering(&ra(0, 1, 1)), Veering::Right);
        assert_eq!(reducible_veering(&ra(1, -12, -1)), Veering::Right);
        assert_eq!(reducible_veering(&ra(-2, 12, 1)), Veering::Left);
        assert_eq!(reducible_veering(&ra(0, 0, 1)), Veering::Both);
        assert_eq!(reducible_veering(&ra(0, -5, 1)), Veering::Left);
        // The disambiguation pair shares a trace.
        assert_eq!(reducible_trace(2, -12), reducible_trace(-2, 12));
        assert_eq!(reducible_trace_shortcut(&reducible_trace(2, -12)), None);
    }

    #[test]
    fn shortcuts() {
        assert_eq!(reducible_trace_shortcut(&reducible_trace(0, 1)), None);
        assert_eq!(reducible_trace_shortcut(&reducible_trace(1, 1)), Some(Veering::Right));
        assert_eq!(reducible_trace_shortcut(&reducible_trace(0, 4)), Some(Veering::Right));
        assert_eq!(reducible_trace_shortcut(&reducible_trace(0, -4)), Some(Veering::Left));
        assert_eq!(reducible_trace_shortcut(&reducible_trace(-1, 0)), Some(Veering::Left));
        assert_eq!(reducible_trace_shortcut(&reducible_trace(0, 0)), None);
        for k in -3..=3 {
            for m in -10..=10 {
                let a = ra(k, m, 1);
                if let Some(v) = reducible_trace_shortcut(&reducible_trace(k, m)) {
                    assert_eq!(v, reducible_veering(&a), "k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn periodic_examples() {
        let p = periodic_veering(&bw("1 2")).unwrap();
        assert_eq!((p.k, p.verdict), (2, Veering::Right));
        let p = periodic_veering(&bw("-2 -1")).unwrap();
        assert_eq!((p.k, p.verdict), (-2, Veering::Left));
        let p = periodic_veering(&bw("Delta")).unwrap();
        assert_eq!((p.k, p.verdict), (3, Veering::Right));
        let d4 = burau_reduced(&bw("1 2").power(12));
        assert_eq!(d4.as_scalar_monomial(), Some(12));
        assert!(periodic_veering(&bw("1")).is_err());
        let p = periodic_veering(&bw("")).unwrap();
        assert_eq!((p.k, p.verdict), (0, Veering::Both));
    }

    #[test]
    fn identity_detection() {
        assert!(is_identity(&bw("")));
        assert!(is_identity(&bw("1 2 1 -2 -1 -2")));
        assert!(!is_identity(&BraidWord::delta2k(1)));
        assert!(!is_identity(&bw("1")));
    }
}
