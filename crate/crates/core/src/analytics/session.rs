use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::engine::{GameState, GameStatus, Word, MAX_GUESSES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Solved on this turn, 1 to 6.
    Won { turn: u8 },
    Lost,
}

/// One completed game: every guess a player made for one puzzle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SessionRecord", into = "SessionRecord")]
pub struct Session {
    pub puzzle_id: u32,
    pub date: NaiveDate,
    pub client_id: String,
    guesses: Vec<Word>,
    outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SessionError {
    #[error("a session holds 1 to 6 guesses, found {0}")]
    GuessCount(usize),
    #[error("won on turn {turn} but {guesses} guesses were recorded")]
    WonTurnMismatch { turn: u8, guesses: usize },
    #[error("a lost session must have exactly 6 guesses, found {0}")]
    IncompleteLoss(usize),
    #[error("outcome is won but won_turn is missing")]
    MissingWonTurn,
    #[error("won_turn given for a lost session")]
    UnexpectedWonTurn,
    #[error("unknown outcome {0:?}")]
    UnknownOutcome(String),
    #[error("guess {index}: {reason}")]
    InvalidGuess { index: usize, reason: String },
    #[error("game is still in progress")]
    Unfinished,
}

impl Session {
    pub fn new(
        puzzle_id: u32,
        date: NaiveDate,
        client_id: impl Into<String>,
        guesses: Vec<Word>,
        outcome: Outcome,
    ) -> Result<Self, SessionError> {
        let n = guesses.len();
        if !(1..=MAX_GUESSES).contains(&n) {
            return Err(SessionError::GuessCount(n));
        }
        match outcome {
            Outcome::Won { turn } if usize::from(turn) != n => {
                return Err(SessionError::WonTurnMismatch { turn, guesses: n })
            }
            Outcome::Lost if n != MAX_GUESSES => return Err(SessionError::IncompleteLoss(n)),
            _ => {}
        }
        Ok(Self {
            puzzle_id,
            date,
            client_id: client_id.into(),
            guesses,
            outcome,
        })
    }

    /// Session record for a finished game.
    pub fn from_game(game: &GameState, date: NaiveDate, client_id: impl Into<String>) -> Result<Self, SessionError> {
        let guesses: Vec<Word> = game.guesses().collect();
        let outcome = match game.status() {
            GameStatus::InProgress => return Err(SessionError::Unfinished),
            GameStatus::Won => Outcome::Won {
                turn: guesses.len() as u8,
            },
            GameStatus::Lost => Outcome::Lost,
        };
        Session::new(game.puzzle_id(), date, client_id, guesses, outcome)
    }

    pub fn guesses(&self) -> &[Word] {
        &self.guesses
    }

    pub fn outcome(&self) -> Outcome {
        self.outcome
    }

    pub fn is_won(&self) -> bool {
        matches!(self.outcome, Outcome::Won { .. })
    }
}

/// Wire form: one JSON object per log line.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SessionRecord {
    date: NaiveDate,
    puzzle_id: u32,
    client_id: String,
    guesses: Vec<String>,
    outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    won_turn: Option<u8>,
}

impl TryFrom<SessionRecord> for Session {
    type Error = SessionError;

    fn try_from(r: SessionRecord) -> Result<Self, Self::Error> {
        let guesses = r
            .guesses
            .iter()
            .enumerate()
            .map(|(index, g)| {
                Word::parse(g).map_err(|e| SessionError::InvalidGuess {
                    index,
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let outcome = match (r.outcome.as_str(), r.won_turn) {
            ("won", Some(turn)) => Outcome::Won { turn },
            ("won", None) => return Err(SessionError::MissingWonTurn),
            ("lost", None) => Outcome::Lost,
            ("lost", Some(_)) => return Err(SessionError::UnexpectedWonTurn),
            (other, _) => return Err(SessionError::UnknownOutcome(other.to_string())),
        };
        Session::new(r.puzzle_id, r.date, r.client_id, guesses, outcome)
    }
}

impl From<Session> for SessionRecord {
    fn from(s: Session) -> Self {
        let (outcome, won_turn) = match s.outcome {
            Outcome::Won { turn } => ("won", Some(turn)),
            Outcome::Lost => ("lost", None),
        };
        SessionRecord {
            date: s.date,
            puzzle_id: s.puzzle_id,
            client_id: s.client_id,
            guesses: s.guesses.iter().map(Word::to_string).collect(),
            outcome: outcome.to_string(),
            won_turn,
        }
    }
}
