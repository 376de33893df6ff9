use std::collections::BTreeMap;

use super::score::{TileRow, TileState};

/// Best state seen per letter across `rows`, by Green > Orange > Grey.
/// Letters never guessed are absent.
pub fn keyboard_hints(rows: &[TileRow]) -> BTreeMap<char, TileState> {
    let mut hints = BTreeMap::new();
    for row in rows {
        for (&letter, &state) in row.guess.letters().iter().zip(&row.tiles) {
            hints
                .entry(letter)
                .and_modify(|best: &mut TileState| {
                    if state.precedence() > best.precedence() {
                        *best = state;
                    }
                })
                .or_insert(state);
        }
    }
    hints
}
