//! Game mechanics: scoring, state transitions, keyboard hints, share grids
//! and the daily schedule. Everything here is a pure function over values.

mod alphabet;
mod game;
mod hints;
mod schedule;
mod score;
mod share;
mod word;

pub use alphabet::{Alphabet, AlphabetError, LATVIAN_LETTERS};
pub use game::{GameState, GameStatus, MAX_GUESSES};
pub use hints::keyboard_hints;
pub use schedule::{daily_index, DailySchedule};
pub use score::{score_guess, TileRow, TileState};
pub use share::{render_share_grid, tile_emoji, GREEN_SQUARE, WHITE_SQUARE, YELLOW_SQUARE};
pub use word::{Word, WordError, WORD_LEN};

use chrono::NaiveDate;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("invalid word: {0}")]
    InvalidWord(#[from] WordError),
    #[error("game is already over ({0:?})")]
    GameOver(GameStatus),
    #[error("game is still in progress")]
    NotFinished,
    #[error("{date} is before the schedule start {start}")]
    BeforeStart { date: NaiveDate, start: NaiveDate },
    #[error("schedule needs a non-empty main list")]
    EmptySchedule,
}
