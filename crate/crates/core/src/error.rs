//! Errors reported by constructors and partial operations.
//!
//! Every value type validates its invariants when it is built, so the
//! arithmetic and comparison functions themselves are total. The only
//! operation that can fail on a valid input is [`collapse`], which demands
//! degenerate components.
//!
//! [`collapse`]: crate::IvnTriplet::collapse

use thiserror::Error;

use crate::scalar::DecimalError;

/// A value or pair of values violates a construction invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    /// A component or bound lies outside `[0, 1]`.
    #[error("value {value} is outside the unit interval [0, 1]")]
    OutsideUnit {
        /// Display form of the offending value.
        value: String,
    },
    /// An interval was given with its lower bound above its upper bound.
    #[error("interval bounds are reversed: lo {lo} > hi {hi}")]
    ReversedBounds {
        /// Display form of the lower bound.
        lo: String,
        /// Display form of the upper bound.
        hi: String,
    },
    /// A subset description holds no points and no intervals.
    #[error("subset description is empty")]
    EmptySubset,
    /// A decimal literal could not be parsed.
    #[error(transparent)]
    Decimal(#[from] DecimalError),
}

/// An interval triplet passed to [`collapse`] has a component of positive
/// width.
///
/// [`collapse`]: crate::IvnTriplet::collapse
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("component {component} is not degenerate: [{lo}, {hi}]")]
pub struct NotDegenerate {
    /// Which component has positive width: `"t"`, `"i"`, or `"f"`.
    pub component: &'static str,
    /// Display form of the lower bound.
    pub lo: String,
    /// Display form of the upper bound.
    pub hi: String,
}

/// A ranking was requested for an empty collection of alternatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("input contains no alternatives")]
pub struct EmptyInput;
