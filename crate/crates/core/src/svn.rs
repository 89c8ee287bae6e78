//! Single-valued neutrosophic triplets and their total order.
//!
//! A triplet `(t, i, f)` grades one alternative by truth, indeterminacy,
//! and falsehood, each independently in `[0, 1]`. Three scalar functions
//! summarize it:
//!
//! - score `(2 + t - i - f) / 3`, the overall quality in `[0, 1]`;
//! - accuracy `t - f`, how decisively truth beats falsehood, in `[-1, 1]`;
//! - certainty `t`, the raw truth grade.
//!
//! [`SvnTriplet::compare`] applies them as a lexicographic cascade. The three
//! keys determine `t`, `i`, and `f` uniquely, so a tie on all of them means
//! the operands are the same triplet: the cascade is a genuine total order
//! and never needs the neutrosophically-equal verdict.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{DomainError, EmptyInput};
use crate::ordering::RankOrdering;
use crate::rank::{rank_by_key, RankedEntry};
use crate::scalar::{ensure_unit, Scalar};

/// A single-valued neutrosophic triplet `(t, i, f)` with each component in
/// `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SvnTriplet<S> {
    t: S,
    i: S,
    f: S,
}

impl<S: Scalar> SvnTriplet<S> {
    /// Build a triplet, rejecting components outside `[0, 1]`.
    pub fn new(t: S, i: S, f: S) -> Result<Self, DomainError> {
        ensure_unit(&t)?;
        ensure_unit(&i)?;
        ensure_unit(&f)?;
        // Component bounds already force 0 <= t + i + f <= 3.
        debug_assert!({
            let sum = t.clone() + i.clone() + f.clone();
            sum.cmp_total(&S::zero()) != Ordering::Less
                && sum.cmp_total(&S::from_ratio(3, 1)) != Ordering::Greater
        });
        Ok(SvnTriplet { t, i, f })
    }

    /// Build a triplet from decimal literals.
    ///
    /// ```
    /// use neutrorank::{Rational, Scalar, SvnTriplet};
    ///
    /// let x = SvnTriplet::<Rational>::from_decimals("0.6", "0.2", "0.3")?;
    /// assert_eq!(x.score(), Rational::from_ratio(7, 10));
    /// # Ok::<(), neutrorank::DomainError>(())
    /// ```
    pub fn from_decimals(t: &str, i: &str, f: &str) -> Result<Self, DomainError> {
        SvnTriplet::new(
            S::parse_decimal(t)?,
            S::parse_decimal(i)?,
            S::parse_decimal(f)?,
        )
    }

    /// Truth grade.
    pub fn t(&self) -> &S {
        &self.t
    }

    /// Indeterminacy grade.
    pub fn i(&self) -> &S {
        &self.i
    }

    /// Falsehood grade.
    pub fn f(&self) -> &S {
        &self.f
    }

    /// Score `(2 + t - i - f) / 3`: mean positiveness of the triplet, in
    /// `[0, 1]`, where indeterminacy and falsehood count against truth.
    pub fn score(&self) -> S {
        (S::from_ratio(2, 1) + self.t.clone() - self.i.clone() - self.f.clone())
            / S::from_ratio(3, 1)
    }

    /// Accuracy `t - f`, in `[-1, 1]`.
    pub fn accuracy(&self) -> S {
        self.t.clone() - self.f.clone()
    }

    /// Certainty `t`, in `[0, 1]`.
    pub fn certainty(&self) -> S {
        self.t.clone()
    }

    /// Negative score `(1 - t + i + f) / 3`: mean negativeness, in `[0, 1]`.
    ///
    /// Complementary to [`score`]: the two always sum to exactly 1, so either
    /// one determines the other.
    ///
    /// [`score`]: SvnTriplet::score
    pub fn negative_score(&self) -> S {
        (S::one() - self.t.clone() + self.i.clone() + self.f.clone()) / S::from_ratio(3, 1)
    }

    /// Extended accuracy `t - i - f`, in `[-2, 1]`.
    ///
    /// An affine rescaling of [`score`] (`3 * score - 2`), so it induces the
    /// same order; it exists for reading a triplet's net signal directly.
    ///
    /// [`score`]: SvnTriplet::score
    pub fn extended_accuracy(&self) -> S {
        self.t.clone() - self.i.clone() - self.f.clone()
    }

    /// The three comparison keys, bundled in cascade order.
    pub fn score_key(&self) -> ScoreKey<S> {
        ScoreKey {
            score: self.score(),
            accuracy: self.accuracy(),
            certainty: self.certainty(),
        }
    }

    /// Three-stage comparison: score first, accuracy to break score ties,
    /// certainty to break accuracy ties.
    ///
    /// Returns [`RankOrdering::Identical`] when all three stages tie; for
    /// single-valued triplets that can only happen when the operands are
    /// equal component for component, so `NeutroEqual` is never produced.
    ///
    /// ```
    /// use neutrorank::{RankOrdering, Rational, SvnTriplet};
    ///
    /// let x = SvnTriplet::<Rational>::from_decimals("0.6", "0.1", "0.3")?;
    /// let y = SvnTriplet::<Rational>::from_decimals("0.5", "0.0", "0.3")?;
    /// // Equal scores; accuracy 0.3 vs 0.2 decides.
    /// assert_eq!(x.compare(&y), RankOrdering::Greater);
    /// # Ok::<(), neutrorank::DomainError>(())
    /// ```
    pub fn compare(&self, other: &Self) -> RankOrdering {
        match self.score_key().lex_cmp(&other.score_key()) {
            Ordering::Greater => RankOrdering::Greater,
            Ordering::Less => RankOrdering::Less,
            Ordering::Equal => RankOrdering::Identical,
        }
    }
}

impl<S: Scalar> fmt::Display for SvnTriplet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

/// The lexicographic sort key `(score, accuracy, certainty)` of a triplet.
///
/// For a key taken from a single triplet the fields are tied together:
/// `certainty = t`, `accuracy = t - f`, and `score = (2 + t - i - f) / 3`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreKey<S> {
    /// Primary key.
    pub score: S,
    /// First tiebreaker.
    pub accuracy: S,
    /// Second tiebreaker.
    pub certainty: S,
}

impl<S: Scalar> ScoreKey<S> {
    /// Compare keys stage by stage.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.score
            .cmp_total(&other.score)
            .then_with(|| self.accuracy.cmp_total(&other.accuracy))
            .then_with(|| self.certainty.cmp_total(&other.certainty))
    }
}

/// Rank alternatives by their triplets: stable descending sort under the
/// three-stage cascade, with tied entries sharing a competition rank.
///
/// Identical triplets keep their input order within the shared rank.
pub fn rank_svn<L, S: Scalar>(
    items: Vec<(L, SvnTriplet<S>)>,
) -> Result<Vec<RankedEntry<L, S>>, EmptyInput> {
    rank_by_key(items, SvnTriplet::score_key)
}
