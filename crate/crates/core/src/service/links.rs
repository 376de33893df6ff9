use percent_encoding::{utf8_percent_encode, NON_ALPHANUMERIC};

use crate::engine::Word;
use crate::text::normalize_lower;

pub const THESAURUS_BASE: &str = "https://tezaurs.lv/";

/// Dictionary entry URL for `word`: the lowercase form, percent-encoded.
pub fn thesaurus_link(word: &Word) -> String {
    let lower = normalize_lower(&word.to_string());
    format!("{THESAURUS_BASE}{}", utf8_percent_encode(&lower, NON_ALPHANUMERIC))
}
