//! Self-hostable daily word-guessing game for Latvian.
//!
//! * [`engine`]: scoring and game rules
//! * [`wordlists`]: building answer and guess lists from raw corpora
//! * [`analytics`]: reports over logged game sessions
//! * [`service`]: the HTTP backend
//! * [`cli`]: the `vardle` command line

pub mod analytics;
pub mod cli;
pub mod engine;
pub mod service;
pub mod text;
pub mod wordlists;

pub use engine::{score_guess, GameState, GameStatus, TileRow, TileState, Word};
