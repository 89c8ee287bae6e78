//! Closed subintervals of `[0, 1]` and the two ways to compare them.
//!
//! Comparing intervals is the step that turns interval-valued triplet
//! ranking into scalar work. Two tools do it:
//!
//! - [`UnitInterval::possibility_degree`] grades `A >= B` smoothly in
//!   `[0, 1]`, with `P(A >= B) + P(B >= A) = 1`;
//! - [`UnitInterval::compare_by_midpoint`] reduces each interval to its
//!   midpoint and compares those.
//!
//! The two agree: the possibility degree is above, below, or at `1/2`
//! exactly when the midpoint comparison says greater, less, or tie. The
//! midpoint form is what the triplet comparators build on, because it
//! produces a scalar key that sorts.

use std::cmp::Ordering;
use std::fmt;

use crate::error::DomainError;
use crate::ordering::RankOrdering;
use crate::scalar::{abs_diff, ensure_unit, max_scalar, midpoint_of, Scalar};

/// A closed interval `[lo, hi]` with `0 <= lo <= hi <= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitInterval<S> {
    lo: S,
    hi: S,
}

impl<S: Scalar> UnitInterval<S> {
    /// Build an interval, rejecting bounds outside `[0, 1]` or in the wrong
    /// order.
    pub fn new(lo: S, hi: S) -> Result<Self, DomainError> {
        ensure_unit(&lo)?;
        ensure_unit(&hi)?;
        if lo.cmp_total(&hi) == Ordering::Greater {
            return Err(DomainError::ReversedBounds {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(UnitInterval { lo, hi })
    }

    /// The point interval `[x, x]`.
    pub fn degenerate(x: S) -> Result<Self, DomainError> {
        ensure_unit(&x)?;
        Ok(UnitInterval { lo: x.clone(), hi: x })
    }

    /// The interval `[m - h, m + h]`; both computed bounds must land in
    /// `[0, 1]` and `h` must not be negative.
    pub fn from_midpoint_halfwidth(m: S, h: S) -> Result<Self, DomainError> {
        UnitInterval::new(m.clone() - h.clone(), m + h)
    }

    /// Build an interval from decimal literals.
    pub fn from_decimals(lo: &str, hi: &str) -> Result<Self, DomainError> {
        UnitInterval::new(S::parse_decimal(lo)?, S::parse_decimal(hi)?)
    }

    /// Bypass validation for bounds already known to be ordered and in
    /// range.
    pub(crate) fn new_unchecked(lo: S, hi: S) -> Self {
        debug_assert!(lo.cmp_total(&hi) != Ordering::Greater);
        UnitInterval { lo, hi }
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

    /// `hi - lo`.
    pub fn width(&self) -> S {
        self.hi.clone() - self.lo.clone()
    }

    /// Whether the interval is a single point.
    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// Whether `x` lies inside the interval.
    pub fn contains(&self, x: &S) -> bool {
        self.lo.cmp_total(x) != Ordering::Greater && x.cmp_total(&self.hi) != Ordering::Greater
    }

    /// Possibility degree `P(A >= B)` that this interval is at least
    /// `other`, in `[0, 1]`:
    ///
    /// ```text
    /// P(A >= B) = max{ 1 - max{ (B.hi - A.lo) / (w(A) + w(B)), 0 }, 0 }
    /// ```
    ///
    /// where `w` is interval width. When both intervals are degenerate the
    /// quotient is undefined and the degree falls back to comparing the two
    /// points: 1, 0, or 1/2.
    ///
    /// ```
    /// use neutrorank::{Rational, Scalar, UnitInterval};
    ///
    /// let a = UnitInterval::<Rational>::from_decimals("0.4", "0.7")?;
    /// let b = UnitInterval::<Rational>::from_decimals("0.3", "0.6")?;
    /// assert_eq!(a.possibility_degree(&b), Rational::from_ratio(2, 3));
    /// assert_eq!(b.possibility_degree(&a), Rational::from_ratio(1, 3));
    /// # Ok::<(), neutrorank::DomainError>(())
    /// ```
    pub fn possibility_degree(&self, other: &Self) -> S {
        let width_sum = self.width() + other.width();
        if width_sum.is_zero() {
            return match self.lo.cmp_total(&other.lo) {
                Ordering::Greater => S::one(),
                Ordering::Less => S::zero(),
                Ordering::Equal => S::from_ratio(1, 2),
            };
        }
        let overshoot = (other.hi.clone() - self.lo.clone()) / width_sum;
        max_scalar(S::one() - max_scalar(overshoot, S::zero()), S::zero())
    }

    /// Compare by midpoint: strictly larger midpoint wins; equal midpoints
    /// are [`Identical`] when the bounds also match and [`NeutroEqual`]
    /// otherwise.
    ///
    /// [`Identical`]: RankOrdering::Identical
    /// [`NeutroEqual`]: RankOrdering::NeutroEqual
    pub fn compare_by_midpoint(&self, other: &Self) -> RankOrdering {
        match self.midpoint().cmp_total(&other.midpoint()) {
            Ordering::Greater => RankOrdering::Greater,
            Ordering::Less => RankOrdering::Less,
            Ordering::Equal if self == other => RankOrdering::Identical,
            Ordering::Equal => RankOrdering::NeutroEqual,
        }
    }

    /// Normalized Hamming distance `(|A.lo - B.lo| + |A.hi - B.hi|) / 2`,
    /// in `[0, 1]`.
    pub fn hamming(&self, other: &Self) -> S {
        (abs_diff(&self.lo, &other.lo) + abs_diff(&self.hi, &other.hi)) / S::from_ratio(2, 1)
    }
}

impl<S: Scalar> fmt::Display for UnitInterval<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Compare a scalar `n` against an interval, treating `n` as the point
/// interval `[n, n]`: the verdict is `n` against the interval's midpoint,
/// with `Identical` reserved for the degenerate interval at exactly `n`.
///
/// Total over all scalar inputs; the intended domain is `n` in `[0, 1]`.
pub fn compare_scalar_interval<S: Scalar>(n: &S, interval: &UnitInterval<S>) -> RankOrdering {
    match n.cmp_total(&interval.midpoint()) {
        Ordering::Greater => RankOrdering::Greater,
        Ordering::Less => RankOrdering::Less,
        Ordering::Equal if interval.is_degenerate() => RankOrdering::Identical,
        Ordering::Equal => RankOrdering::NeutroEqual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn iv(lo: &str, hi: &str) -> UnitInterval<Rational> {
        UnitInterval::from_decimals(lo, hi).unwrap()
    }

    #[test]
    fn construction_validates_bounds() {
        assert!(UnitInterval::new(rat(0, 1), rat(1, 1)).is_ok());
        assert!(UnitInterval::degenerate(rat(1, 2)).is_ok());
        assert_eq!(
            UnitInterval::new(rat(7, 10), rat(2, 5)),
            Err(DomainError::ReversedBounds {
                lo: "7/10".to_string(),
                hi: "2/5".to_string()
            })
        );
        assert!(matches!(
            UnitInterval::new(rat(-1, 10), rat(1, 2)),
            Err(DomainError::OutsideUnit { .. })
        ));
        assert!(UnitInterval::new(rat(1, 2), rat(11, 10)).is_err());
    }

    #[test]
    fn midpoint_examples() {
        assert_eq!(iv("0.4", "0.7").midpoint(), rat(11, 20));
        assert_eq!(iv("0.3", "0.6").midpoint(), rat(9, 20));
        assert_eq!(iv("0.5", "0.5").midpoint(), rat(1, 2));
    }

    #[test]
    fn width_and_degeneracy() {
        assert_eq!(iv("0.3", "0.6").width(), rat(3, 10));
        assert!(!iv("0.3", "0.6").is_degenerate());
        assert!(iv("0.4", "0.4").is_degenerate());
    }

    #[test]
    fn from_midpoint_halfwidth_builds_the_symmetric_interval() {
        assert_eq!(
            UnitInterval::from_midpoint_halfwidth(rat(1, 2), rat(1, 5)).unwrap(),
            iv("0.3", "0.7")
        );
        // Negative halfwidth reverses the bounds.
        assert!(UnitInterval::from_midpoint_halfwidth(rat(1, 2), rat(-1, 5)).is_err());
        // Bounds must stay inside the unit interval.
        assert!(UnitInterval::from_midpoint_halfwidth(rat(9, 10), rat(1, 5)).is_err());
    }

    #[test]
    fn containment() {
        let a = iv("0.3", "0.6");
        assert!(a.contains(&rat(3, 10)));
        assert!(a.contains(&rat(1, 2)));
        assert!(a.contains(&rat(3, 5)));
        assert!(!a.contains(&rat(1, 5)));
        assert!(!a.contains(&rat(7, 10)));
    }

    #[test]
    fn possibility_degree_on_overlapping_intervals() {
        let a = iv("0.4", "0.7");
        let b = iv("0.3", "0.6");
        assert_eq!(a.possibility_degree(&b), rat(2, 3));
        assert_eq!(b.possibility_degree(&a), rat(1, 3));
    }

    #[test]
    fn possibility_degree_is_half_on_shared_midpoints() {
        // Different widths, same midpoint 0.4.
        assert_eq!(
            iv("0.1", "0.7").possibility_degree(&iv("0.3", "0.5")),
            rat(1, 2)
        );
        assert_eq!(
            iv("0.3", "0.5").possibility_degree(&iv("0.1", "0.7")),
            rat(1, 2)
        );
        // Same midpoint 0.4 again, both directions.
        assert_eq!(
            iv("0.3", "0.5").possibility_degree(&iv("0.2", "0.6")),
            rat(1, 2)
        );
        assert_eq!(
            iv("0.2", "0.6").possibility_degree(&iv("0.3", "0.5")),
            rat(1, 2)
        );
    }

    #[test]
    fn possibility_degree_saturates_on_disjoint_intervals() {
        let low = iv("0", "0.1");
        let high = iv("0.9", "1");
        assert_eq!(low.possibility_degree(&high), rat(0, 1));
        assert_eq!(high.possibility_degree(&low), rat(1, 1));
    }

    #[test]
    fn possibility_degree_between_degenerate_intervals_compares_points() {
        let p = UnitInterval::degenerate(rat(2, 5)).unwrap();
        let q = UnitInterval::degenerate(rat(3, 10)).unwrap();
        assert_eq!(p.possibility_degree(&q), rat(1, 1));
        assert_eq!(q.possibility_degree(&p), rat(0, 1));
        assert_eq!(p.possibility_degree(&p.clone()), rat(1, 2));
    }

    #[test]
    fn possibility_degree_with_one_degenerate_operand() {
        // [0.4, 0.4] vs [0.2, 0.8]: P = 1 - max((0.8 - 0.4) / 0.6, 0) = 1/3.
        let point = UnitInterval::degenerate(rat(2, 5)).unwrap();
        let spread = iv("0.2", "0.8");
        assert_eq!(point.possibility_degree(&spread), rat(1, 3));
        assert_eq!(spread.possibility_degree(&point), rat(2, 3));
    }

    #[test]
    fn compare_by_midpoint_examples() {
        assert_eq!(
            iv("0.4", "0.7").compare_by_midpoint(&iv("0.3", "0.6")),
            RankOrdering::Greater
        );
        assert_eq!(
            iv("0.3", "0.6").compare_by_midpoint(&iv("0.4", "0.7")),
            RankOrdering::Less
        );
        assert_eq!(
            iv("0.1", "0.7").compare_by_midpoint(&iv("0.3", "0.5")),
            RankOrdering::NeutroEqual
        );
        assert_eq!(
            iv("0.3", "0.5").compare_by_midpoint(&iv("0.3", "0.5")),
            RankOrdering::Identical
        );
    }

    #[test]
    fn scalar_against_interval() {
        assert_eq!(
            compare_scalar_interval(&rat(2, 5), &iv("0.2", "0.8")),
            RankOrdering::Less
        );
        assert_eq!(
            compare_scalar_interval(&rat(7, 10), &iv("0.5", "0.8")),
            RankOrdering::Greater
        );
        assert_eq!(
            compare_scalar_interval(&rat(1, 2), &iv("0.3", "0.7")),
            RankOrdering::NeutroEqual
        );
        assert_eq!(
            compare_scalar_interval(&rat(1, 2), &iv("0.5", "0.5")),
            RankOrdering::Identical
        );
    }

    #[test]
    fn hamming_examples() {
        let a = iv("0.3", "0.7");
        // Distance to the all-false and all-true poles mirrors the midpoint.
        assert_eq!(a.hamming(&iv("0", "0")), rat(1, 2));
        assert_eq!(a.hamming(&iv("1", "1")), rat(1, 2));
        assert_eq!(a.hamming(&a.clone()), rat(0, 1));
        assert_eq!(iv("0.2", "0.5").hamming(&iv("0.4", "0.9")), rat(3, 10));
        // Maximum distance: opposite corners of the unit square.
        assert_eq!(iv("0", "0").hamming(&iv("1", "1")), rat(1, 1));
    }
}
