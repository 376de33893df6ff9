use std::collections::{BTreeMap, BTreeSet, HashSet};

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

use super::lexicon::{InflectionTable, Lexicon};
use super::stats::{is_candidate, CorpusStats};
use crate::engine::{Alphabet, Word};

pub const DEFAULT_K_MAIN: usize = 1500;
pub const DEFAULT_K_SECONDARY: usize = 15000;

/// Provenance recorded alongside a built pair of lists.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListMetadata {
    pub k_main: usize,
    pub k_secondary: usize,
    /// Input name to SHA-256 hex digest.
    #[serde(default)]
    pub sources: BTreeMap<String, String>,
    /// Digests of inflection tables merged into the secondary list.
    #[serde(default)]
    pub inflection_tables: BTreeSet<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub built_at: Option<DateTime<Utc>>,
}

/// Daily answers (`main`, in frequency order) and additional valid guesses
/// (`secondary`). The two are disjoint.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WordLists {
    pub main: Vec<Word>,
    pub secondary: BTreeSet<Word>,
    pub metadata: ListMetadata,
}

impl WordLists {
    /// A guess is valid when it is in either list.
    pub fn is_valid_guess(&self, word: &Word) -> bool {
        self.secondary.contains(word) || self.main.contains(word)
    }

    pub fn answer(&self, puzzle_id: u32) -> Option<Word> {
        self.main.get(puzzle_id as usize).copied()
    }
}

/// A top-ranked candidate the lexicon did not confirm; left for a human
/// reviewer to accept or discard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReviewEntry {
    /// 1-based position in the frequency ranking.
    pub rank: usize,
    pub word: Word,
    pub frequency: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildOutcome {
    pub lists: WordLists,
    pub review: Vec<ReviewEntry>,
    /// Set when the input had no candidates at all.
    pub empty_input: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("k_main and k_secondary must both be positive")]
    ZeroSize,
}

/// Splits the frequency ranking into the main and secondary lists.
///
/// Candidates are walked in rank order. Lexicon-approved words fill `main`
/// up to `k_main`; rejected words met on the way go to the review report.
/// After that the next `k_secondary` approved words form `secondary`.
pub fn build_lists(
    stats: &CorpusStats,
    lexicon: &Lexicon,
    k_main: usize,
    k_secondary: usize,
) -> Result<BuildOutcome, BuildError> {
    if k_main == 0 || k_secondary == 0 {
        return Err(BuildError::ZeroSize);
    }
    let ranked = stats.ranked_candidates();
    let mut main = Vec::with_capacity(k_main.min(ranked.len()));
    let mut secondary = BTreeSet::new();
    let mut review = Vec::new();

    for (i, &(word, frequency)) in ranked.iter().enumerate() {
        let approved = lexicon.contains(&word);
        if main.len() < k_main {
            if approved {
                main.push(word);
            } else {
                review.push(ReviewEntry {
                    rank: i + 1,
                    word,
                    frequency,
                });
            }
        } else if secondary.len() < k_secondary {
            if approved {
                secondary.insert(word);
            }
        } else {
            break;
        }
    }

    Ok(BuildOutcome {
        empty_input: ranked.is_empty(),
        lists: WordLists {
            main,
            secondary,
            metadata: ListMetadata {
                k_main,
                k_secondary,
                ..Default::default()
            },
        },
        review,
    })
}

/// Adds every five-letter inflected form to the secondary list, skipping
/// forms already in `main`. Applying the same table twice is a no-op.
pub fn merge_inflections(lists: &WordLists, table: &InflectionTable) -> WordLists {
    let alphabet = Alphabet::latvian();
    let main: HashSet<&Word> = lists.main.iter().collect();
    let mut merged = lists.clone();
    for form in table.forms() {
        if !is_candidate(form, alphabet) {
            continue;
        }
        if let Ok(word) = Word::parse(form) {
            if !main.contains(&word) {
                merged.secondary.insert(word);
            }
        }
    }
    merged.metadata.inflection_tables.insert(table.digest());
    merged
}
