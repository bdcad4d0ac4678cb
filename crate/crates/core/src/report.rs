//! Routing a word to the right engine and collecting the result in a
//! serializable report.

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::burau::{burau_reduced, burau_unreduced, psi, BurauMatrix};
use crate::classify::{periodic_veering, reducible_outcome, thurston_type, Method, ThurstonType, Veering};
use crate::error::{Error, Result};
use crate::freegroup::Generator;
use crate::intersect::intersection_table;
use crate::reconstruct::{general_veering, GeneralVerdict};
use crate::sidedness::Side;

/// Which engines to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MethodChoice {
    /// Special rule for reducible and periodic braids, general engine otherwise.
    #[default]
    Auto,
    /// Special rules only; pseudo-Anosov input is rejected.
    ReducedOnly,
    General,
    /// Special rule and general engine, required to agree.
    Both,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub method: MethodChoice,
    /// Attach both Burau matrices and the intersection table.
    pub verbose: bool,
    /// Attach the per-generator sidedness comparisons.
    pub oracle: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Invariants {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_i: Option<[i64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub translation_number: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleEntry {
    pub generator: Generator,
    pub side: Side,
    pub k: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_prime: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub input: String,
    /// Normalized word, re-parsable.
    pub word: String,
    pub exponent_sum: i64,
    pub thurston_type: ThurstonType,
    /// Trace of the `SL2(Z)` image.
    pub trace: String,
    pub verdict: Veering,
    pub method: Method,
    pub invariants: Invariants,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unreduced: Option<BurauMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced: Option<BurauMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<OracleEntry>>,
}

fn general_invariants(inv: &mut Invariants, g: &GeneralVerdict) {
    let ks: Vec<i64> = g.generators.iter().map(|r| r.k).collect();
    inv.k_i = Some([ks[0], ks[1], ks[2]]);
    inv.translation_number = Some(g.translation_number.to_string());
}

/// Parses and classifies one word.
pub fn classify_text(text: &str, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let w = BraidWord::parse(text)?;
    let mut report = classify_word(&w, opts)?;
    report.input = text.to_string();
    Ok(report)
}

pub fn classify_word(w: &BraidWord, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let ttype = thurston_type(w);
    let mut inv = Invariants::default();
    let mut notes = Vec::new();

    let special: Option<(Veering, Method)> = match ttype {
        ThurstonType::Reducible if opts.method != MethodChoice::General => {
            let out = reducible_outcome(w)?;
            inv.k = Some(out.analysis.k);
            inv.m = Some(out.analysis.m);
            inv.lambda = Some(out.analysis.lambda);
            Some((out.verdict, Method::ReducibleRule))
        }
        ThurstonType::Periodic if opts.method != MethodChoice::General => {
            let out = periodic_veering(w)?;
            inv.k = Some(out.k);
            Some((out.verdict, Method::PeriodicRule))
        }
        _ => None,
    };

    let wants_general = match opts.method {
        MethodChoice::ReducedOnly => false,
        MethodChoice::Auto => special.is_none() || opts.oracle,
        MethodChoice::General | MethodChoice::Both => true,
    };
    if special.is_none() && !wants_general {
        return Err(Error::Unsupported(
            "pseudo-Anosov braids need the general engine; use --method auto or general".into(),
        ));
    }
    let general = if wants_general { Some(general_veering(w)?) } else { None };
    if let Some(g) = &general {
        general_invariants(&mut inv, g);
        if g.corrected {
            notes.push(format!(
                "generators all move {} but the translation number is 0: not veering",
                if g.generator_verdict == Veering::Right { "right" } else { "left" }
            ));
        }
    }

    let (verdict, method) = match (special, &general) {
        (Some((sv, _)), Some(g)) if opts.method == MethodChoice::Both => {
            if sv != g.verdict {
                return Err(Error::InternalInconsistency(format!(
                    "special rule says {sv}, general engine says {}",
                    g.verdict
                )));
            }
            (sv, Method::CrossChecked)
        }
        (Some((sv, m)), Some(g)) => {
            if sv != g.verdict {
                return Err(Error::InternalInconsistency(format!(
                    "special rule says {sv}, general engine says {}",
                    g.verdict
                )));
            }
            (sv, m)
        }
        (Some((sv, m)), None) => (sv, m),
        (None, Some(g)) => (g.verdict, Method::GeneralRule),
        (None, None) => unreachable!("checked above"),
    };

    let (unreduced, reduced, intersection) = if opts.verbose {
        let table = intersection_table(w)?;
        let rows = table
            .numbers()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        (Some(burau_unreduced(w)), Some(burau_reduced(w)), Some(rows))
    } else {
        (None, None, None)
    };
    let oracle = match (&general, opts.oracle) {
        (Some(g), true) => Some(
            g.generators
                .iter()
                .map(|r| OracleEntry {
                    generator: r.generator,
                    side: r.side,
                    k: r.k,
                    y_prime: r.y_prime.as_ref().map(|u| u.to_string()),
                })
                .collect(),
        ),
        _ => None,
    };

    Ok(ClassificationReport {
        input: w.to_string(),
        word: w.to_string(),
        exponent_sum: w.exponent_sum(),
        thurston_type: ttype,
        trace: psi(w).trace().to_string(),
        verdict,
        method,
        invariants: inv,
        notes,
        unreduced,
        reduced,
        intersection,
        oracle,
    })
}

/// Lines of a batch file that hold words, with 1-based line numbers. Blank
/// lines and lines starting with `#` are skipped.
pub fn batch_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// Classifies many words in parallel; results are in input order.
pub fn classify_batch(inputs: &[&str], opts: &ClassifyOptions) -> Vec<Result<ClassificationReport>> {
    inputs.par_iter().map(|s| classify_text(s, opts)).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub total: usize,
    pub right: usize,
    pub left: usize,
    pub both: usize,
    pub neither: usize,
    pub errors: usize,
}

impl BatchSummary {
    pub fn tally(results: &[Result<ClassificationReport>]) -> Self {
        let mut s = Self { total: results.len(), ..Self::default() };
        for r in results {
            match r {
                Ok(rep) => match rep.verdict {
                    Veering::Right => s.right += 1,
                    Veering::Left => s.left += 1,
                    Veering::Both => s.both += 1,
                    Veering::Neither => s.neither += 1,
                },
                Err(_) => s.errors += 1,
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(s: &str, method: MethodChoice) -> Result<ClassificationReport> {
        classify_text(s, &ClassifyOptions { method, ..Default::default() })
    }

    #[test]
    fn routing() {
        let r = run("1", MethodChoice::Auto).unwrap();
        assert_eq!((r.thurston_type, r.verdict, r.method), (ThurstonType::Reducible, Veering::Right, Method::ReducibleRule));
        assert_eq!((r.invariants.k, r.invariants.m), (Some(0), Some(1)));
        let r = run("-1 -2", MethodChoice::Auto).unwrap();
        assert_eq!((r.thurston_type, r.verdict, r.invariants.k), (ThurstonType::Periodic, Veering::Left, Some(-2)));
        let r = run("1 -2", MethodChoice::Auto).unwrap();
        assert_eq!((r.thurston_type, r.verdict, r.method), (ThurstonType::PseudoAnosov, Veering::Neither, Method::GeneralRule));
        let r = run("1 2", MethodChoice::Both).unwrap();
        assert_eq!((r.verdict, r.method), (Veering::Right, Method::CrossChecked));
        let r = run("1 2", MethodChoice::General).unwrap();
        assert_eq!((r.verdict, r.method), (Veering::Right, Method::GeneralRule));
        assert!(matches!(run("1 -2", MethodChoice::ReducedOnly), Err(Error::Unsupported(_))));
        assert!(matches!(run("s3", MethodChoice::Auto), Err(Error::Parse(_))));
    }

    #[test]
    fn verbose_fields() {
        let opts = ClassifyOptions { verbose: true, oracle: true, ..Default::default() };
        let r = classify_text("", &opts).unwrap();
        assert_eq!(r.verdict, Veering::Both);
        assert_eq!(r.intersection.unwrap()[0], vec!["1", "0", "1"]);
        assert_eq!(r.oracle.unwrap().len(), 3);
    }

    #[test]
    fn batch_order_and_summary() {
        let text = "# header\n1\n\n-1\n1 -2\ns9\n";
        let lines = batch_lines(text);
        assert_eq!(lines.iter().map(|l| l.0).collect::<Vec<_>>(), vec![2, 4, 5, 6]);
        let inputs: Vec<&str> = lines.iter().map(|l| l.1).collect();
        let results = classify_batch(&inputs, &ClassifyOptions::default());
        let verdicts: Vec<Option<Veering>> = results.iter().map(|r| r.as_ref().ok().map(|x| x.verdict)).collect();
        assert_eq!(verdicts, vec![Some(Veering::Right), Some(Veering::Left), Some(Veering::Neither), None]);
        let s = BatchSummary::tally(&results);
        assert_eq!((s.total, s.right, s.left, s.neither, s.errors), (4, 1, 1, 1, 1));
    }
}
