use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::engine::{Alphabet, Word, WORD_LEN};

/// Longest token length tracked in the per-length distribution.
pub const MAX_TRACKED_LENGTH: usize = 20;

/// True when `token` has exactly five letters, all from `alphabet`.
/// `token` is expected to be normalized already.
pub fn is_candidate(token: &str, alphabet: &Alphabet) -> bool {
    let mut n = 0;
    for c in token.chars() {
        n += 1;
        if n > WORD_LEN || !alphabet.contains(c) {
            return false;
        }
    }
    n == WORD_LEN
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LengthCount {
    pub unique: u64,
    pub total: u64,
}

/// Token counts gathered from one or more corpora.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorpusStats {
    token_frequencies: BTreeMap<Word, u64>,
    per_length: BTreeMap<usize, LengthCount>,
    // distinct tokens seen so far, needed to merge unique counts
    seen: HashSet<String>,
}

impl CorpusStats {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_token(&mut self, token: &str, alphabet: &Alphabet) {
        let len = token.chars().count();
        if (1..=MAX_TRACKED_LENGTH).contains(&len) {
            let entry = self.per_length.entry(len).or_default();
            entry.total += 1;
            if !self.seen.contains(token) {
                self.seen.insert(token.to_string());
                entry.unique += 1;
            }
        }
        if is_candidate(token, alphabet) {
            if let Ok(word) = Word::parse_in(token, alphabet) {
                *self.token_frequencies.entry(word).or_default() += 1;
            }
        }
    }

    /// Folds `other` into `self`. Merging is associative and commutative.
    pub fn merge(&mut self, other: CorpusStats) {
        for (word, count) in other.token_frequencies {
            *self.token_frequencies.entry(word).or_default() += count;
        }
        for (len, counts) in &other.per_length {
            self.per_length.entry(*len).or_default().total += counts.total;
        }
        for token in other.seen {
            let len = token.chars().count();
            if self.seen.insert(token) {
                self.per_length.entry(len).or_default().unique += 1;
            }
        }
    }

    pub fn token_frequencies(&self) -> &BTreeMap<Word, u64> {
        &self.token_frequencies
    }

    pub fn per_length(&self) -> &BTreeMap<usize, LengthCount> {
        &self.per_length
    }

    pub fn is_empty(&self) -> bool {
        self.per_length.is_empty()
    }

    /// Candidates by descending frequency, ties in code-point order.
    pub fn ranked_candidates(&self) -> Vec<(Word, u64)> {
        let mut ranked: Vec<(Word, u64)> =
            self.token_frequencies.iter().map(|(w, &c)| (*w, c)).collect();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        ranked
    }
}

/// Counts a normalized token stream.
pub fn count_frequencies<I, S>(tokens: I, alphabet: &Alphabet) -> CorpusStats
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut stats = CorpusStats::new();
    for token in tokens {
        stats.add_token(token.as_ref(), alphabet);
    }
    stats
}
