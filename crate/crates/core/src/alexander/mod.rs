//! Alexander polynomials of knots given as PD codes, and the exact series
//! `Delta(e^h)` with its logarithm.
//!
//! Fixture format: one crossing `X(a,b,c,d)` per line, labels being
//! positive integers naming the edges between crossings. `a` is the
//! incoming under-strand and `b, c, d` follow counterclockwise. Text after
//! `#` and blank lines are ignored; an empty file is the unknot.

mod laurent;
mod matrix;
mod pd;
mod series;
mod skein;

pub use laurent::LaurentPolynomial;
pub use matrix::alexander_poly;
pub use pd::{parse_pd, Crossing, PdCode};
pub use series::{conway_series, exp_of_negated, exp_substitute, zbcr_series, PowerSeries};
pub use skein::{alexander_via_skein, conway_poly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("label {label} occurs {count} times")]
    ArcCount { label: u32, count: usize },
    #[error("strand orientation is inconsistent at crossing {0}")]
    Orientation(usize),
    #[error("the code has more than one component")]
    MultiComponent,
    #[error("degenerate diagram")]
    Degenerate,
    #[error("constant term is not 1")]
    NonUnitConstantTerm,
}

/// Knots up to seven crossings shipped with the crate, by name.
pub const CORPUS: [(&str, &str); 9] = [
    ("unknot", include_str!("../../fixtures/knots/unknot.pd")),
    ("3_1", include_str!("../../fixtures/knots/3_1.pd")),
    ("4_1", include_str!("../../fixtures/knots/4_1.pd")),
    ("5_1", include_str!("../../fixtures/knots/5_1.pd")),
    ("5_2", include_str!("../../fixtures/knots/5_2.pd")),
    ("6_1", include_str!("../../fixtures/knots/6_1.pd")),
    ("6_2", include_str!("../../fixtures/knots/6_2.pd")),
    ("6_3", include_str!("../../fixtures/knots/6_3.pd")),
    ("7_1", include_str!("../../fixtures/knots/7_1.pd")),
];

/// Parsed corpus knot.
pub fn corpus_knot(name: &str) -> Option<PdCode> {
    CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| parse_pd(t).expect("valid fixture"))
}
