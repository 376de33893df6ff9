use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Alphabet;
use crate::text::normalize;

pub const WORD_LEN: usize = 5;

/// A five-letter word over the Latvian alphabet, uppercase and NFC-composed.
///
/// Ordering is lexicographic by code point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word([char; WORD_LEN]);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("expected {WORD_LEN} letters, found {0}")]
    Length(usize),
    #[error("{0:?} is not a letter")]
    NotALetter(char),
    #[error("letter {0:?} is outside the alphabet")]
    OutsideAlphabet(char),
}

impl Word {
    /// Normalizes `input` and validates it against the Latvian alphabet.
    pub fn parse(input: &str) -> Result<Self, WordError> {
        Self::parse_in(input, Alphabet::latvian())
    }

    pub fn parse_in(input: &str, alphabet: &Alphabet) -> Result<Self, WordError> {
        let normalized = normalize(input.trim());
        let chars: Vec<char> = normalized.chars().collect();
        // Non-letters are reported before length so "AB CD" reads as malformed.
        if let Some(&c) = chars.iter().find(|c| !c.is_alphabetic()) {
            return Err(WordError::NotALetter(c));
        }
        if chars.len() != WORD_LEN {
            return Err(WordError::Length(chars.len()));
        }
        if let Some(&c) = chars.iter().find(|&&c| !alphabet.contains(c)) {
            return Err(WordError::OutsideAlphabet(c));
        }
        let mut letters = ['\0'; WORD_LEN];
        letters.copy_from_slice(&chars);
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[char; WORD_LEN] {
        &self.0
    }

    pub fn count(&self, letter: char) -> usize {
        self.0.iter().filter(|&&c| c == letter).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.0 {
            fmt::Write::write_char(f, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}
