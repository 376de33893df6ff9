//! Play analytics over logged sessions: outcome distributions, difficulty
//! rankings, popular guesses per turn, vocabulary growth and guess paths.
//!
//! All functions are pure over a slice of sessions and ignore input order.

mod distribution;
mod log;
mod paths;
mod ranking;
mod reports;
mod session;
mod timeline;

pub use distribution::{guess_distribution, Bucket, GuessDistribution};
pub use log::{read_log_file, read_sessions, LogSummary, SessionLog};
pub use paths::{export_dot, guess_path_graph, PathEdge, PathGraph};
pub use ranking::{difficulty_ranking, top_guesses_by_turn, DifficultyRanking, DifficultyRow, DEFAULT_TOP_N};
pub use reports::{write_difficulty_csv, write_distribution_csv, write_timeline_csv, write_top_guesses_csv};
pub use session::{Outcome, Session, SessionError};
pub use timeline::unique_forms_timeline;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalyticsError {
    #[error("turn must be between 1 and 6, got {0}")]
    TurnOutOfRange(usize),
}
