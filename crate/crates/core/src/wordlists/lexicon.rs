use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::{self, BufRead};

use sha2::{Digest, Sha256};

use crate::engine::Word;
use crate::text::normalize;

/// Lemma lengths the inflection tables are drawn from.
pub const LEMMA_LENGTHS: std::ops::RangeInclusive<usize> = 3..=8;

/// Entries attested in an external lexical database, one per line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: HashSet<String>,
}

impl Lexicon {
    pub fn from_reader<R: BufRead>(reader: R) -> io::Result<Self> {
        let mut entries = HashSet::new();
        for line in reader.lines() {
            let line = line?;
            let entry = normalize(line.trim());
            if !entry.is_empty() {
                entries.insert(entry);
            }
        }
        Ok(Self { entries })
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.entries.contains(&word.to_string())
    }

    pub fn contains_str(&self, entry: &str) -> bool {
        self.entries.contains(&normalize(entry))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<S: AsRef<str>> FromIterator<S> for Lexicon {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Self {
            entries: iter
                .into_iter()
                .map(|s| normalize(s.as_ref().trim()))
                .filter(|s| !s.is_empty())
                .collect(),
        }
    }
}

/// Precomputed `lemma -> inflected forms`, read from `lemma<TAB>form` rows.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InflectionTable {
    records: BTreeMap<String, BTreeSet<String>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TableLoad {
    pub records: u64,
    /// Rows without exactly two non-empty fields, or with a lemma outside
    /// [`LEMMA_LENGTHS`].
    pub skipped: u64,
}

impl InflectionTable {
    pub fn from_reader<R: BufRead>(reader: R) -> io::Result<(Self, TableLoad)> {
        let mut table = InflectionTable::default();
        let mut load = TableLoad::default();
        for line in reader.lines() {
            let line = line?;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            if table.insert_row(line) {
                load.records += 1;
            } else {
                load.skipped += 1;
            }
        }
        Ok((table, load))
    }

    fn insert_row(&mut self, line: &str) -> bool {
        let mut fields = line.split('\t');
        let (Some(lemma), Some(form), None) = (fields.next(), fields.next(), fields.next()) else {
            return false;
        };
        let (lemma, form) = (normalize(lemma.trim()), normalize(form.trim()));
        if form.is_empty() || !LEMMA_LENGTHS.contains(&lemma.chars().count()) {
            return false;
        }
        self.insert(lemma, form);
        true
    }

    pub fn insert(&mut self, lemma: impl Into<String>, form: impl Into<String>) {
        self.records.entry(lemma.into()).or_default().insert(form.into());
    }

    pub fn records(&self) -> &BTreeMap<String, BTreeSet<String>> {
        &self.records
    }

    pub fn forms(&self) -> impl Iterator<Item = &str> {
        self.records.values().flatten().map(String::as_str)
    }

    /// SHA-256 over the sorted records, so equal tables share a digest.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        for (lemma, forms) in &self.records {
            for form in forms {
                hasher.update(lemma.as_bytes());
                hasher.update(b"\t");
                hasher.update(form.as_bytes());
                hasher.update(b"\n");
            }
        }
        hex::encode(hasher.finalize())
    }
}
