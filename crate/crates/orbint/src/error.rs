// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Error types for interval construction, expression parsing and orbit runs.

use thiserror::Error;

use crate::interval::Interval;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntervalError {
    #[error("invalid interval endpoints [{lo}, {hi}]")]
    InvalidEndpoints { lo: f64, hi: f64 },
    #[error("division by an interval containing zero: {0}")]
    DivisionByZero(Interval),
    #[error("midpoint of an interval with a non-finite endpoint: {0}")]
    NonFiniteMidpoint(Interval),
    #[error("not a finite decimal number: {text:?}")]
    InvalidDecimal { text: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier {name:?} at position {pos} (variables are 'x' and 'r')")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("exponent at position {pos} must be a non-negative integer literal")]
    BadExponent { pos: usize },
    #[error("exponent at position {pos} exceeds the supported maximum of {max}")]
    ExponentTooLarge { pos: usize, max: u32 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrbitError {
    /// Intersecting extensions of the same map can never produce an empty
    /// set; hitting this means the arithmetic (or the input pair of
    /// expressions) violates enclosure soundness.
    #[error(
        "empty intersection at iteration {iteration}: the supplied extensions do not \
         enclose a common orbit (soundness fault)"
    )]
    EmptyIntersection { iteration: usize },
    #[error("run configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
