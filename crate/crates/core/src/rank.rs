//! Shared ranking machinery: stable descending sort plus competition ranks.

use std::cmp::Ordering;

use crate::error::EmptyInput;
use crate::ordering::TieKind;
use crate::scalar::Scalar;
use crate::svn::ScoreKey;

/// One row of a ranking: a label, its sort key, and its final position.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedEntry<L, S> {
    /// 1-based competition rank. Tied entries share a rank and the next
    /// distinct key resumes at its list position, so two leaders are both
    /// rank 1 and the runner-up is rank 3.
    pub rank: usize,
    /// Caller-supplied label, usually an id.
    pub label: L,
    /// The keys the entry was sorted by.
    pub key: ScoreKey<S>,
    /// For entries sharing their rank, how the group members relate.
    /// `None` for a rank held by a single entry.
    pub tie: Option<TieKind>,
}

/// Sort descending by key (stable, so key-ties keep input order) and assign
/// competition ranks.
pub(crate) fn rank_by_key<L, T, S>(
    items: Vec<(L, T)>,
    key_of: impl Fn(&T) -> ScoreKey<S>,
) -> Result<Vec<RankedEntry<L, S>>, EmptyInput>
where
    T: PartialEq,
    S: Scalar,
{
    if items.is_empty() {
        return Err(EmptyInput);
    }
    let mut rows: Vec<(L, T, ScoreKey<S>)> = items
        .into_iter()
        .map(|(label, item)| {
            let key = key_of(&item);
            (label, item, key)
        })
        .collect();
    rows.sort_by(|a, b| b.2.lex_cmp(&a.2));

    // Walk the groups of equal keys to fix each row's rank and tie kind.
    let mut placement = vec![(0usize, None); rows.len()];
    let mut start = 0;
    while start < rows.len() {
        let mut end = start + 1;
        while end < rows.len() && rows[end].2.lex_cmp(&rows[start].2) == Ordering::Equal {
            end += 1;
        }
        let tie = if end - start > 1 {
            let uniform = rows[start + 1..end].iter().all(|row| row.1 == rows[start].1);
            Some(if uniform {
                TieKind::Identical
            } else {
                TieKind::NeutroEqual
            })
        } else {
            None
        };
        for slot in &mut placement[start..end] {
            *slot = (start + 1, tie);
        }
        start = end;
    }

    Ok(rows
        .into_iter()
        .zip(placement)
        .map(|((label, _, key), (rank, tie))| RankedEntry {
            rank,
            label,
            key,
            tie,
        })
        .collect())
}
