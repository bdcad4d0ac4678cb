//! Exact Burau matrices, Nielsen–Thurston type and veering verdicts for
//! braids on three strands.
//!
//! The layers, bottom up: [`laurent`] arithmetic, [`braid`] words, the
//! [`freegroup`] action and Fox calculus, [`burau`] matrices. On top of
//! those sit the engines: [`classify`] for reducible and periodic braids,
//! [`intersect`] and [`reconstruct`] for the general case, with
//! [`sidedness`] and [`handle`] deciding which way loops move. [`report`]
//! routes a word through them.

pub mod braid;
pub mod burau;
pub mod classify;
pub mod error;
pub mod freegroup;
pub mod handle;
pub mod intersect;
pub mod laurent;
pub mod reconstruct;
pub mod report;
pub mod sidedness;

pub use braid::BraidWord;
pub use burau::{burau_reduced, burau_unreduced, psi, BurauKind, BurauMatrix, IntMatrix2};
pub use classify::{thurston_type, Method, ThurstonType, Veering};
pub use error::{Error, ParseError, Result};
pub use freegroup::{artin_apply, delta2_conjugate, fox_column, FreeWord, Generator};
pub use laurent::LaurentPoly;
pub use report::{classify_text, classify_word, ClassificationReport, ClassifyOptions, MethodChoice};
pub use sidedness::{compare, Side};
