use serde::{Deserialize, Serialize};

use super::word::{Word, WORD_LEN};

/// Outcome for one tile of a scored guess.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TileState {
    /// Right letter, right position.
    Green,
    /// Letter is in the answer, elsewhere.
    Orange,
    /// Letter not available.
    Grey,
}

impl TileState {
    /// Hint precedence: Green > Orange > Grey.
    pub fn precedence(self) -> u8 {
        match self {
            TileState::Green => 2,
            TileState::Orange => 1,
            TileState::Grey => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TileState::Green => "green",
            TileState::Orange => "orange",
            TileState::Grey => "grey",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TileRow {
    pub guess: Word,
    pub tiles: [TileState; WORD_LEN],
}

impl TileRow {
    pub fn is_solved(&self) -> bool {
        self.tiles.iter().all(|&t| t == TileState::Green)
    }
}

/// Scores `guess` against `answer`.
///
/// Exact matches are marked first and use up their answer letter. Remaining
/// guess letters are then scanned left to right and turn orange while the
/// answer still has unused copies of that letter.
pub fn score_guess(answer: &Word, guess: &Word) -> TileRow {
    let answer_letters = answer.letters();
    let guess_letters = guess.letters();
    let mut tiles = [TileState::Grey; WORD_LEN];
    // unmatched answer letters, consumed as oranges are handed out
    let mut unused: [Option<char>; WORD_LEN] = [None; WORD_LEN];

    for i in 0..WORD_LEN {
        if guess_letters[i] == answer_letters[i] {
            tiles[i] = TileState::Green;
        } else {
            unused[i] = Some(answer_letters[i]);
        }
    }
    for i in 0..WORD_LEN {
        if tiles[i] == TileState::Green {
            continue;
        }
        if let Some(slot) = unused.iter_mut().find(|s| **s == Some(guess_letters[i])) {
            *slot = None;
            tiles[i] = TileState::Orange;
        }
    }

    TileRow {
        guess: *guess,
        tiles,
    }
}
