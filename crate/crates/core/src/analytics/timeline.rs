use std::collections::{BTreeMap, BTreeSet, HashSet};

use chrono::NaiveDate;

use super::session::Session;
use crate::engine::Word;

/// Cumulative count of distinct guessed words, one entry per day from the
/// first to the last session date (days without sessions included).
pub fn unique_forms_timeline<'a>(sessions: impl IntoIterator<Item = &'a Session>) -> Vec<(NaiveDate, usize)> {
    let mut by_date: BTreeMap<NaiveDate, BTreeSet<Word>> = BTreeMap::new();
    for s in sessions {
        by_date.entry(s.date).or_default().extend(s.guesses().iter().copied());
    }
    let (Some(&first), Some(&last)) = (by_date.keys().next(), by_date.keys().next_back()) else {
        return Vec::new();
    };

    let mut seen: HashSet<Word> = HashSet::new();
    first
        .iter_days()
        .take_while(|d| *d <= last)
        .map(|day| {
            if let Some(words) = by_date.get(&day) {
                seen.extend(words);
            }
            (day, seen.len())
        })
        .collect()
}
