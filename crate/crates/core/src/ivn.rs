//! Interval-valued and subset-valued neutrosophic triplets.
//!
//! An interval triplet grades truth, indeterminacy, and falsehood each with
//! a closed subinterval of `[0, 1]`. Two families of quality functions are
//! implemented:
//!
//! - the interval-valued family ([`zhang_score`], [`zhang_accuracy`],
//!   [`zhang_certainty`]), whose values are themselves intervals and which
//!   get compared through their midpoints;
//! - the scalar family ([`fs_score`], [`fs_accuracy`], [`fs_certainty`]),
//!   which averages the bounds directly.
//!
//! The two produce the same order, because each interval-family midpoint is
//! an affine function of the matching scalar-family value (for instance
//! `mid(zhang_score) = 3 * fs_score`). [`IvnTriplet::compare`] uses the
//! scalar family; [`IvnTriplet::compare_zhang`] is the interval-family twin
//! kept as a cross-check.
//!
//! Unlike the single-valued cascade, a full tie here does not force
//! identity: the keys only see component midpoints, so triplets that agree
//! in midpoints while differing in widths compare as
//! [`RankOrdering::NeutroEqual`].
//!
//! Subset-valued triplets, whose components are finite unions of points and
//! intervals, are handled by taking each component's closed hull, after
//! which they rank as interval triplets.
//!
//! [`zhang_score`]: IvnTriplet::zhang_score
//! [`zhang_accuracy`]: IvnTriplet::zhang_accuracy
//! [`zhang_certainty`]: IvnTriplet::zhang_certainty
//! [`fs_score`]: IvnTriplet::fs_score
//! [`fs_accuracy`]: IvnTriplet::fs_accuracy
//! [`fs_certainty`]: IvnTriplet::fs_certainty

use std::cmp::Ordering;
use std::fmt;

use crate::error::{DomainError, EmptyInput, NotDegenerate};
use crate::interval::UnitInterval;
use crate::ordering::RankOrdering;
use crate::rank::{rank_by_key, RankedEntry};
use crate::scalar::{ensure_unit, max_scalar, midpoint_of, min_scalar, Scalar};
use crate::svn::{ScoreKey, SvnTriplet};

/// A closed interval `[lo, hi]` with ordered but otherwise unconstrained
/// bounds; the codomain of the interval-valued quality functions, which
/// escape `[0, 1]` (scores reach `[0, 3]`, accuracies `[-1, 1]`).
#[derive(Debug, Clone, PartialEq)]
pub struct RealInterval<S> {
    lo: S,
    hi: S,
}

impl<S: Scalar> RealInterval<S> {
    /// Build an interval, rejecting reversed bounds.
    pub fn new(lo: S, hi: S) -> Result<Self, DomainError> {
        if lo.cmp_total(&hi) == Ordering::Greater {
            return Err(DomainError::ReversedBounds {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(RealInterval { lo, hi })
    }

    /// The interval spanned by two values in either order.
    pub fn from_unordered(a: S, b: S) -> Self {
        RealInterval {
            lo: min_scalar(a.clone(), b.clone()),
            hi: max_scalar(a, b),
        }
    }

    /// Lower bound.
    pub fn lo(&self) -> &S {
        &self.lo
    }

    /// Upper bound.
    pub fn hi(&self) -> &S {
        &self.hi
    }

    /// `(lo + hi) / 2`.
    pub fn midpoint(&self) -> S {
        midpoint_of(&self.lo, &self.hi)
    }

    /// Midpoint comparison, with the same tie split as
    /// [`UnitInterval::compare_by_midpoint`].
    pub fn compare_by_midpoint(&self, other: &Self) -> RankOrdering {
        match self.midpoint().cmp_total(&other.midpoint()) {
            Ordering::Greater => RankOrdering::Greater,
            Ordering::Less => RankOrdering::Less,
            Ordering::Equal if self == other => RankOrdering::Identical,
            Ordering::Equal => RankOrdering::NeutroEqual,
        }
    }
}

impl<S: Scalar> fmt::Display for RealInterval<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl<S: Scalar> From<UnitInterval<S>> for RealInterval<S> {
    fn from(interval: UnitInterval<S>) -> Self {
        RealInterval {
            lo: interval.lo().clone(),
            hi: interval.hi().clone(),
        }
    }
}

/// An interval-valued neutrosophic triplet: truth, indeterminacy, and
/// falsehood, each graded by a subinterval of `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IvnTriplet<S> {
    t: UnitInterval<S>,
    i: UnitInterval<S>,
    f: UnitInterval<S>,
}

impl<S: Scalar> IvnTriplet<S> {
    /// Bundle three already-validated component intervals.
    pub fn new(t: UnitInterval<S>, i: UnitInterval<S>, f: UnitInterval<S>) -> Self {
        IvnTriplet { t, i, f }
    }

    /// Build a triplet from decimal literals, one `(lo, hi)` pair per
    /// component.
    ///
    /// ```
    /// use neutrorank::{IvnTriplet, Rational, Scalar};
    ///
    /// let a = IvnTriplet::<Rational>::from_decimals(
    ///     ("0.4", "0.5"),
    ///     ("0.2", "0.3"),
    ///     ("0.3", "0.4"),
    /// )?;
    /// assert_eq!(a.fs_score(), Rational::from_ratio(37, 60));
    /// # Ok::<(), neutrorank::DomainError>(())
    /// ```
    pub fn from_decimals(
        t: (&str, &str),
        i: (&str, &str),
        f: (&str, &str),
    ) -> Result<Self, DomainError> {
        Ok(IvnTriplet {
            t: UnitInterval::from_decimals(t.0, t.1)?,
            i: UnitInterval::from_decimals(i.0, i.1)?,
            f: UnitInterval::from_decimals(f.0, f.1)?,
        })
    }

    /// Truth interval.
    pub fn t(&self) -> &UnitInterval<S> {
        &self.t
    }

    /// Indeterminacy interval.
    pub fn i(&self) -> &UnitInterval<S> {
        &self.i
    }

    /// Falsehood interval.
    pub fn f(&self) -> &UnitInterval<S> {
        &self.f
    }

    /// Interval-valued score
    /// `[t.lo + (1 - i.hi) + (1 - f.hi), t.hi + (1 - i.lo) + (1 - f.lo)]`:
    /// the worst and best case of summing truth with complemented
    /// indeterminacy and falsehood. Bounds range over `[0, 3]`.
    pub fn zhang_score(&self) -> RealInterval<S> {
        let lo = self.t.lo().clone()
            + (S::one() - self.i.hi().clone())
            + (S::one() - self.f.hi().clone());
        let hi = self.t.hi().clone()
            + (S::one() - self.i.lo().clone())
            + (S::one() - self.f.lo().clone());
        RealInterval { lo, hi }
    }

    /// Interval-valued accuracy: the span of `t - f` taken bound by bound,
    /// `[min(t.lo - f.lo, t.hi - f.hi), max(t.lo - f.lo, t.hi - f.hi)]`.
    pub fn zhang_accuracy(&self) -> RealInterval<S> {
        RealInterval::from_unordered(
            self.t.lo().clone() - self.f.lo().clone(),
            self.t.hi().clone() - self.f.hi().clone(),
        )
    }

    /// Interval-valued certainty: the truth interval itself.
    pub fn zhang_certainty(&self) -> UnitInterval<S> {
        self.t.clone()
    }

    /// Scalar score `(4 + t.lo + t.hi - i.lo - i.hi - f.lo - f.hi) / 6`,
    /// in `[0, 1]`; the single-valued score applied to component midpoints.
    pub fn fs_score(&self) -> S {
        (S::from_ratio(4, 1) + self.t.lo().clone() + self.t.hi().clone()
            - self.i.lo().clone()
            - self.i.hi().clone()
            - self.f.lo().clone()
            - self.f.hi().clone())
            / S::from_ratio(6, 1)
    }

    /// Scalar accuracy `(t.lo + t.hi - f.lo - f.hi) / 2`, in `[-1, 1]`.
    pub fn fs_accuracy(&self) -> S {
        (self.t.lo().clone() + self.t.hi().clone()
            - self.f.lo().clone()
            - self.f.hi().clone())
            / S::from_ratio(2, 1)
    }

    /// Scalar certainty `(t.lo + t.hi) / 2`, the truth midpoint, in
    /// `[0, 1]`.
    pub fn fs_certainty(&self) -> S {
        self.t.midpoint()
    }

    /// The scalar-family keys, bundled in cascade order.
    pub fn fs_key(&self) -> ScoreKey<S> {
        ScoreKey {
            score: self.fs_score(),
            accuracy: self.fs_accuracy(),
            certainty: self.fs_certainty(),
        }
    }

    /// Three-stage comparison on the scalar family: score, then accuracy,
    /// then certainty.
    ///
    /// A full tie means the component midpoints agree; the verdict is then
    /// [`RankOrdering::Identical`] when all six bounds match exactly and
    /// [`RankOrdering::NeutroEqual`] otherwise.
    pub fn compare(&self, other: &Self) -> RankOrdering {
        match self.fs_key().lex_cmp(&other.fs_key()) {
            Ordering::Greater => RankOrdering::Greater,
            Ordering::Less => RankOrdering::Less,
            Ordering::Equal if self == other => RankOrdering::Identical,
            Ordering::Equal => RankOrdering::NeutroEqual,
        }
    }

    /// The same cascade through the interval-valued family, comparing
    /// `zhang_score`, then `zhang_accuracy`, then `zhang_certainty`, each by
    /// midpoint.
    ///
    /// Each stage's midpoint is an affine rescaling of the matching
    /// [`compare`] stage, so the two comparators return the same verdict on
    /// every input; this one exists as an executable cross-check.
    ///
    /// [`compare`]: IvnTriplet::compare
    pub fn compare_zhang(&self, other: &Self) -> RankOrdering {
        let stages = [
            self.zhang_score().compare_by_midpoint(&other.zhang_score()),
            self.zhang_accuracy()
                .compare_by_midpoint(&other.zhang_accuracy()),
            self.zhang_certainty()
                .compare_by_midpoint(&other.zhang_certainty()),
        ];
        for outcome in stages {
            if !outcome.is_tie() {
                return outcome;
            }
        }
        if self == other {
            RankOrdering::Identical
        } else {
            RankOrdering::NeutroEqual
        }
    }

    /// Whether every component is a point interval.
    pub fn is_degenerate(&self) -> bool {
        self.t.is_degenerate() && self.i.is_degenerate() && self.f.is_degenerate()
    }

    /// Project a fully degenerate triplet onto the single-valued form.
    ///
    /// The projection preserves the quality functions (`fs_score` equals the
    /// collapsed triplet's score, and likewise for accuracy and certainty),
    /// so degenerate interval data ranks exactly as its single-valued image.
    pub fn collapse(&self) -> Result<SvnTriplet<S>, NotDegenerate> {
        for (name, component) in [("t", &self.t), ("i", &self.i), ("f", &self.f)] {
            if !component.is_degenerate() {
                return Err(NotDegenerate {
                    component: name,
                    lo: component.lo().to_string(),
                    hi: component.hi().to_string(),
                });
            }
        }
        Ok(SvnTriplet::new(
            self.t.lo().clone(),
            self.i.lo().clone(),
            self.f.lo().clone(),
        )
        .expect("degenerate bounds are already validated"))
    }
}

impl<S: Scalar> fmt::Display for IvnTriplet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

/// Embed a single-valued triplet as the degenerate interval triplet
/// `([t, t], [i, i], [f, f])`.
impl<S: Scalar> From<SvnTriplet<S>> for IvnTriplet<S> {
    fn from(svn: SvnTriplet<S>) -> Self {
        IvnTriplet {
            t: UnitInterval::new_unchecked(svn.t().clone(), svn.t().clone()),
            i: UnitInterval::new_unchecked(svn.i().clone(), svn.i().clone()),
            f: UnitInterval::new_unchecked(svn.f().clone(), svn.f().clone()),
        }
    }
}

/// A nonempty finite description of a subset of `[0, 1]`: isolated points
/// plus closed intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitSubset<S> {
    points: Vec<S>,
    intervals: Vec<UnitInterval<S>>,
}

impl<S: Scalar> UnitSubset<S> {
    /// Build a subset description. Every point must lie in `[0, 1]` and the
    /// description must mention at least one point or interval.
    pub fn new(points: Vec<S>, intervals: Vec<UnitInterval<S>>) -> Result<Self, DomainError> {
        if points.is_empty() && intervals.is_empty() {
            return Err(DomainError::EmptySubset);
        }
        for point in &points {
            ensure_unit(point)?;
        }
        Ok(UnitSubset { points, intervals })
    }

    /// The isolated points.
    pub fn points(&self) -> &[S] {
        &self.points
    }

    /// The interval parts.
    pub fn intervals(&self) -> &[UnitInterval<S>] {
        &self.intervals
    }

    /// Smallest closed interval containing everything described:
    /// `[inf, sup]` over all points and interval bounds.
    pub fn hull(&self) -> UnitInterval<S> {
        let mut bounds = self
            .points
            .iter()
            .chain(self.intervals.iter().map(UnitInterval::lo))
            .chain(self.intervals.iter().map(UnitInterval::hi));
        let first = bounds.next().expect("subset is nonempty by construction");
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for bound in bounds {
            lo = min_scalar(lo, bound.clone());
            hi = max_scalar(hi, bound.clone());
        }
        UnitInterval::new_unchecked(lo, hi)
    }
}

/// A subset-valued neutrosophic triplet: each component graded by a finite
/// union of points and intervals in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetTriplet<S> {
    t: UnitSubset<S>,
    i: UnitSubset<S>,
    f: UnitSubset<S>,
}

impl<S: Scalar> SubsetTriplet<S> {
    /// Bundle three already-validated component subsets.
    pub fn new(t: UnitSubset<S>, i: UnitSubset<S>, f: UnitSubset<S>) -> Self {
        SubsetTriplet { t, i, f }
    }

    /// Truth subset.
    pub fn t(&self) -> &UnitSubset<S> {
        &self.t
    }

    /// Indeterminacy subset.
    pub fn i(&self) -> &UnitSubset<S> {
        &self.i
    }

    /// Falsehood subset.
    pub fn f(&self) -> &UnitSubset<S> {
        &self.f
    }

    /// Replace each component with its closed hull, producing the interval
    /// triplet that subset data ranks through.
    ///
    /// Idempotent on components that are a single interval already.
    pub fn hull(&self) -> IvnTriplet<S> {
        IvnTriplet {
            t: self.t.hull(),
            i: self.i.hull(),
            f: self.f.hull(),
        }
    }
}

/// Rank alternatives by their interval triplets: stable descending sort
/// under the scalar-family cascade, tied entries sharing a competition rank.
///
/// A shared rank is flagged [`TieKind::Identical`] when its members are all
/// the same triplet and [`TieKind::NeutroEqual`] otherwise.
///
/// [`TieKind::Identical`]: crate::TieKind::Identical
/// [`TieKind::NeutroEqual`]: crate::TieKind::NeutroEqual
pub fn rank_ivn<L, S: Scalar>(
    items: Vec<(L, IvnTriplet<S>)>,
) -> Result<Vec<RankedEntry<L, S>>, EmptyInput> {
    rank_by_key(items, IvnTriplet::fs_key)
}
