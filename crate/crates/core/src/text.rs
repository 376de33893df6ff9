//! Text normal form shared by every module: canonical composition, uppercase.

use unicode_normalization::UnicodeNormalization;

/// NFC-composes and uppercases `s`.
///
/// Latvian diacritic letters are single code points after composition, so the
/// number of `char`s in the result is the number of user-visible letters.
pub fn normalize(s: &str) -> String {
    let upper: String = s.nfc().collect::<String>().to_uppercase();
    upper.nfc().collect()
}

/// Lowercase canonical form, used for dictionary links.
pub fn normalize_lower(s: &str) -> String {
    let lower: String = s.nfc().collect::<String>().to_lowercase();
    lower.nfc().collect()
}
