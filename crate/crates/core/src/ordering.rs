//! Outcome vocabulary for triplet and interval comparisons.

use std::fmt;

/// Outcome of comparing two triplets or two intervals.
///
/// `Greater` and `Less` are strict outcomes. The two remaining variants
/// split what a plain `Ordering::Equal` would conflate:
///
/// - `Identical`: the operands are the same value, component for component.
/// - `NeutroEqual`: the operands tie on every comparison key but differ
///   somewhere the keys cannot see, such as two intervals sharing a midpoint
///   with different widths. Written `A =_N B`.
///
/// Single-valued comparison never returns `NeutroEqual`: a triplet's three
/// keys pin down all three components, so a full tie forces identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankOrdering {
    /// The left operand ranks strictly higher.
    Greater,
    /// The left operand ranks strictly lower.
    Less,
    /// The operands are equal component for component.
    Identical,
    /// The operands tie on every key without being identical.
    NeutroEqual,
}

impl RankOrdering {
    /// Whether the outcome is a tie (`Identical` or `NeutroEqual`).
    pub fn is_tie(self) -> bool {
        matches!(self, RankOrdering::Identical | RankOrdering::NeutroEqual)
    }

    /// The outcome with the operands swapped.
    pub fn reversed(self) -> Self {
        match self {
            RankOrdering::Greater => RankOrdering::Less,
            RankOrdering::Less => RankOrdering::Greater,
            tie => tie,
        }
    }
}

impl fmt::Display for RankOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankOrdering::Greater => "Greater",
            RankOrdering::Less => "Less",
            RankOrdering::Identical => "Identical",
            RankOrdering::NeutroEqual => "NeutroEqual",
        })
    }
}

/// How the members of a shared rank relate to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TieKind {
    /// Every member of the rank is the same value.
    Identical,
    /// The members tie on keys but are not all the same value.
    NeutroEqual,
}

impl TieKind {
    /// Stable lower-case label, as used in machine-readable reports.
    pub fn label(self) -> &'static str {
        match self {
            TieKind::Identical => "identical",
            TieKind::NeutroEqual => "neutro_equal",
        }
    }
}

impl fmt::Display for TieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}
