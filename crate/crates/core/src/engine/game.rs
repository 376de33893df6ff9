use serde::{Deserialize, Serialize};

use super::score::{score_guess, TileRow};
use super::word::Word;
use super::EngineError;

pub const MAX_GUESSES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameStatus {
    InProgress,
    Won,
    Lost,
}

impl GameStatus {
    /// Status implied by a sequence of scored rows.
    pub fn of_rows(rows: &[TileRow]) -> GameStatus {
        match rows.last() {
            Some(last) if last.is_solved() => GameStatus::Won,
            Some(_) if rows.len() >= MAX_GUESSES => GameStatus::Lost,
            _ => GameStatus::InProgress,
        }
    }

    pub fn is_terminal(self) -> bool {
        self != GameStatus::InProgress
    }
}

/// One player's attempt at one puzzle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameState {
    puzzle_id: u32,
    answer: Word,
    rows: Vec<TileRow>,
    status: GameStatus,
}

impl GameState {
    pub fn new(puzzle_id: u32, answer: Word) -> Self {
        Self {
            puzzle_id,
            answer,
            rows: Vec::new(),
            status: GameStatus::InProgress,
        }
    }

    pub fn puzzle_id(&self) -> u32 {
        self.puzzle_id
    }

    pub fn answer(&self) -> &Word {
        &self.answer
    }

    pub fn rows(&self) -> &[TileRow] {
        &self.rows
    }

    pub fn status(&self) -> GameStatus {
        self.status
    }

    pub fn guesses(&self) -> impl Iterator<Item = Word> + '_ {
        self.rows.iter().map(|r| r.guess)
    }

    /// Returns the state after scoring `guess`.
    pub fn apply_guess(&self, guess: Word) -> Result<GameState, EngineError> {
        let mut next = self.clone();
        next.push_guess(guess)?;
        Ok(next)
    }

    /// In-place variant of [`GameState::apply_guess`]; returns the new row.
    pub fn push_guess(&mut self, guess: Word) -> Result<TileRow, EngineError> {
        if self.status.is_terminal() {
            return Err(EngineError::GameOver(self.status));
        }
        let row = score_guess(&self.answer, &guess);
        self.rows.push(row);
        self.status = GameStatus::of_rows(&self.rows);
        Ok(row)
    }
}
