//! Proptest strategies shared by the law suites.
//!
//! Rational values are drawn with small denominators on purpose: collisions
//! between derived keys are what exercise the tie stages of the
//! comparators, and collisions need common denominators to happen at all.

// Each law suite compiles this module separately and uses its own subset.
#![allow(dead_code)]

use neutrorank::{IvnTriplet, Rational, Scalar, SvnTriplet, UnitInterval};
use proptest::prelude::*;

/// Exact rational in `[0, 1]` with denominator at most 24.
pub fn unit_rational() -> impl Strategy<Value = Rational> {
    (1i64..=24)
        .prop_flat_map(|den| (0..=den).prop_map(move |num| Rational::from_ratio(num, den)))
}

/// Rational strictly inside `(0, 1)`, for midpoints that need slack on both
/// sides.
pub fn interior_rational() -> impl Strategy<Value = Rational> {
    (2i64..=24)
        .prop_flat_map(|den| (1..den).prop_map(move |num| Rational::from_ratio(num, den)))
}

pub fn svn_rational() -> impl Strategy<Value = SvnTriplet<Rational>> {
    (unit_rational(), unit_rational(), unit_rational())
        .prop_map(|(t, i, f)| SvnTriplet::new(t, i, f).expect("components in range"))
}

pub fn svn_float() -> impl Strategy<Value = SvnTriplet<f64>> {
    (0.0f64..=1.0, 0.0f64..=1.0, 0.0f64..=1.0)
        .prop_map(|(t, i, f)| SvnTriplet::new(t, i, f).expect("components in range"))
}

pub fn unit_interval_rational() -> impl Strategy<Value = UnitInterval<Rational>> {
    (unit_rational(), unit_rational()).prop_map(|(a, b)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        UnitInterval::new(lo, hi).expect("ordered unit bounds")
    })
}

/// Degenerate interval `[x, x]`.
pub fn degenerate_interval_rational() -> impl Strategy<Value = UnitInterval<Rational>> {
    unit_rational().prop_map(|x| UnitInterval::degenerate(x).expect("unit point"))
}

/// Mix of arbitrary, degenerate, and shared-midpoint operand pairs, so the
/// boundary branches of the interval comparisons are all reachable.
pub fn interval_pair_rational(
) -> impl Strategy<Value = (UnitInterval<Rational>, UnitInterval<Rational>)> {
    prop_oneof![
        3 => (unit_interval_rational(), unit_interval_rational()),
        1 => (degenerate_interval_rational(), degenerate_interval_rational()),
        1 => (degenerate_interval_rational(), unit_interval_rational()),
        2 => same_midpoint_intervals(),
    ]
}

/// Two intervals sharing a midpoint strictly inside `(0, 1)`, with
/// independently chosen widths.
pub fn same_midpoint_intervals(
) -> impl Strategy<Value = (UnitInterval<Rational>, UnitInterval<Rational>)> {
    (interior_rational(), 0i64..=48, 0i64..=48).prop_map(|(m, ka, kb)| {
        (
            symmetric_interval(&m, ka),
            symmetric_interval(&m, kb),
        )
    })
}

/// The interval around `m` whose half-width is `k/48` of the largest
/// half-width that keeps the interval inside `[0, 1]`.
pub fn symmetric_interval(m: &Rational, k: i64) -> UnitInterval<Rational> {
    let slack = std::cmp::min(m.clone(), Rational::from_ratio(1, 1) - m.clone());
    let half = slack * Rational::from_ratio(k, 48);
    UnitInterval::from_midpoint_halfwidth(m.clone(), half).expect("stays inside [0, 1]")
}

pub fn ivn_rational() -> impl Strategy<Value = IvnTriplet<Rational>> {
    (
        unit_interval_rational(),
        unit_interval_rational(),
        unit_interval_rational(),
    )
        .prop_map(|(t, i, f)| IvnTriplet::new(t, i, f))
}

/// Fully degenerate interval triplet, tagged with its scalar source.
pub fn degenerate_ivn_rational(
) -> impl Strategy<Value = (SvnTriplet<Rational>, IvnTriplet<Rational>)> {
    svn_rational().prop_map(|svn| {
        let ivn = IvnTriplet::from(svn.clone());
        (svn, ivn)
    })
}

/// Two interval triplets agreeing on all three component midpoints.
pub fn same_midpoint_ivn_pair(
) -> impl Strategy<Value = (IvnTriplet<Rational>, IvnTriplet<Rational>)> {
    (
        (interior_rational(), 0i64..=48, 0i64..=48),
        (interior_rational(), 0i64..=48, 0i64..=48),
        (interior_rational(), 0i64..=48, 0i64..=48),
    )
        .prop_map(|(t, i, f)| {
            let left = IvnTriplet::new(
                symmetric_interval(&t.0, t.1),
                symmetric_interval(&i.0, i.1),
                symmetric_interval(&f.0, f.1),
            );
            let right = IvnTriplet::new(
                symmetric_interval(&t.0, t.2),
                symmetric_interval(&i.0, i.2),
                symmetric_interval(&f.0, f.2),
            );
            (left, right)
        })
}

/// Pair strategy covering arbitrary, shared-midpoint, and equal operands.
pub fn ivn_pair_rational() -> impl Strategy<Value = (IvnTriplet<Rational>, IvnTriplet<Rational>)>
{
    prop_oneof![
        3 => (ivn_rational(), ivn_rational()),
        2 => same_midpoint_ivn_pair(),
        1 => ivn_rational().prop_map(|a| (a.clone(), a)),
    ]
}
