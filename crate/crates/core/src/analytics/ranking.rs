use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::distribution::GuessDistribution;
use super::session::Session;
use super::AnalyticsError;
use crate::engine::{Word, MAX_GUESSES};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DifficultyRow {
    pub puzzle_id: u32,
    pub word: Word,
    pub sessions: u64,
    pub fail_count: u64,
    pub fail_fraction: f64,
    pub distribution: GuessDistribution,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct DifficultyRanking {
    /// Hardest first.
    pub rows: Vec<DifficultyRow>,
    /// Sessions for unknown puzzles, or wins whose last guess is not the answer.
    pub skipped: usize,
}

impl DifficultyRanking {
    pub fn hardest(&self, n: usize) -> &[DifficultyRow] {
        &self.rows[..n.min(self.rows.len())]
    }

    /// The `n` easiest puzzles, easiest first.
    pub fn easiest(&self, n: usize) -> Vec<&DifficultyRow> {
        self.rows.iter().rev().take(n).collect()
    }
}

// fail_a / n_a against fail_b / n_b without floating point
fn cmp_fail_fraction(a: &DifficultyRow, b: &DifficultyRow) -> Ordering {
    let lhs = u128::from(a.fail_count) * u128::from(b.sessions.max(1));
    let rhs = u128::from(b.fail_count) * u128::from(a.sessions.max(1));
    lhs.cmp(&rhs)
}

/// Ranks `puzzles` by failed sessions, most failures first.
///
/// Ties fall back to the failure fraction (descending), then the answer word,
/// then the puzzle id. Every puzzle appears exactly once, including those
/// without sessions.
pub fn difficulty_ranking<'a>(
    sessions: impl IntoIterator<Item = &'a Session>,
    puzzles: &BTreeMap<u32, Word>,
) -> DifficultyRanking {
    let mut dists: HashMap<u32, GuessDistribution> = HashMap::new();
    let mut skipped = 0;
    for s in sessions {
        let Some(answer) = puzzles.get(&s.puzzle_id) else {
            skipped += 1;
            continue;
        };
        if s.is_won() && s.guesses().last() != Some(answer) {
            skipped += 1;
            continue;
        }
        dists.entry(s.puzzle_id).or_default().record(s.outcome());
    }

    let mut rows: Vec<DifficultyRow> = puzzles
        .iter()
        .map(|(&puzzle_id, &word)| {
            let distribution = dists.remove(&puzzle_id).unwrap_or_default();
            let sessions = distribution.total();
            let fail_count = distribution.failed();
            DifficultyRow {
                puzzle_id,
                word,
                sessions,
                fail_count,
                fail_fraction: if sessions == 0 {
                    0.0
                } else {
                    fail_count as f64 / sessions as f64
                },
                distribution,
            }
        })
        .collect();
    rows.sort_by(|a, b| {
        b.fail_count
            .cmp(&a.fail_count)
            .then_with(|| cmp_fail_fraction(b, a))
            .then_with(|| a.word.cmp(&b.word))
            .then_with(|| a.puzzle_id.cmp(&b.puzzle_id))
    });
    DifficultyRanking { rows, skipped }
}

pub const DEFAULT_TOP_N: usize = 15;

/// Most frequent words played at `turn` (1-based), ties in code-point order.
pub fn top_guesses_by_turn<'a>(
    sessions: impl IntoIterator<Item = &'a Session>,
    turn: usize,
    n: usize,
) -> Result<Vec<(Word, u64)>, AnalyticsError> {
    if !(1..=MAX_GUESSES).contains(&turn) {
        return Err(AnalyticsError::TurnOutOfRange(turn));
    }
    let mut counts: HashMap<Word, u64> = HashMap::new();
    for s in sessions {
        if let Some(&word) = s.guesses().get(turn - 1) {
            *counts.entry(word).or_default() += 1;
        }
    }
    let mut ranked: Vec<(Word, u64)> = counts.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    ranked.truncate(n);
    Ok(ranked)
}
