use std::collections::{HashMap, HashSet};
use std::io;
use std::sync::{Arc, Mutex};

use chrono::NaiveDate;
use chrono_tz::Tz;
use serde::Serialize;

use super::clock::Clock;
use super::links::thesaurus_link;
use crate::analytics::{guess_distribution, top_guesses_by_turn, GuessDistribution, Session, SessionLog};
use crate::engine::{render_share_grid, DailySchedule, GameState, GameStatus, TileState, Word, WordError};
use crate::wordlists::WordLists;

pub const DEFAULT_TITLE: &str = "Vardle";
pub const REASON_NOT_IN_LIST: &str = "not-in-word-list";
pub const REASON_MALFORMED: &str = "malformed-word";
const TOP_OPENERS: usize = 15;

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub start_date: NaiveDate,
    pub tz: Tz,
    pub title: String,
}

#[derive(Debug, thiserror::Error)]
pub enum ServiceError {
    #[error("word lists are not loaded")]
    Unavailable,
    #[error("today ({today}) is before the configured start date")]
    NotStarted { today: NaiveDate },
    #[error("unknown session token")]
    UnknownToken,
    #[error("session is already finished")]
    Finished,
    #[error("session is not finished yet")]
    NotFinished,
    #[error("session log: {0}")]
    Log(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PuzzleRef {
    pub puzzle_id: u32,
    pub date: NaiveDate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GuessReply {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tiles: Option<[TileState; 5]>,
    pub turn: usize,
    pub status: GameStatus,
}

impl GuessReply {
    pub fn is_malformed(&self) -> bool {
        self.reason == Some(REASON_MALFORMED)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinalizeReply {
    pub answer: Word,
    pub thesaurus_url: String,
    pub share_text: String,
    pub already_logged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OpenerCount {
    pub word: Word,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReply {
    pub puzzle_id: u32,
    /// True for today's puzzle; word lists are withheld.
    pub current: bool,
    pub distribution: GuessDistribution,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top_openers: Option<Vec<OpenerCount>>,
}

struct SessionEntry {
    client_id: String,
    date: NaiveDate,
    game: GameState,
    logged: bool,
}

impl SessionEntry {
    /// Turn shown to the client: the next turn while playing, the final one after.
    fn turn(&self) -> usize {
        let played = self.game.rows().len();
        if self.game.status().is_terminal() {
            played
        } else {
            played + 1
        }
    }
}

/// Game server state, independent of the HTTP layer.
pub struct GameService {
    lists: Arc<WordLists>,
    valid: HashSet<Word>,
    schedule: Option<DailySchedule>,
    config: ServiceConfig,
    clock: Arc<dyn Clock>,
    log: SessionLog,
    sessions: Mutex<HashMap<String, Arc<Mutex<SessionEntry>>>>,
    // (client_id, puzzle_id) pairs already written to the log
    logged: Mutex<HashSet<(String, u32)>>,
}

impl GameService {
    pub fn new(lists: WordLists, config: ServiceConfig, clock: Arc<dyn Clock>, log: SessionLog) -> Self {
        let valid = lists.main.iter().chain(&lists.secondary).copied().collect();
        let schedule = u32::try_from(lists.main.len())
            .ok()
            .and_then(|n| DailySchedule::new(config.start_date, n).ok());
        Self {
            lists: Arc::new(lists),
            valid,
            schedule,
            config,
            clock,
            log,
            sessions: Mutex::new(HashMap::new()),
            logged: Mutex::new(HashSet::new()),
        }
    }

    pub fn config(&self) -> &ServiceConfig {
        &self.config
    }

    pub fn log(&self) -> &SessionLog {
        &self.log
    }

    pub fn today(&self) -> Result<PuzzleRef, ServiceError> {
        let schedule = self.schedule.as_ref().ok_or(ServiceError::Unavailable)?;
        let date = self.clock.today(self.config.tz);
        let puzzle_id = schedule
            .index_for(date)
            .map_err(|_| ServiceError::NotStarted { today: date })?;
        Ok(PuzzleRef { puzzle_id, date })
    }

    /// Opens a session on today's puzzle and returns its token.
    pub fn create_session(&self, client_id: Option<String>) -> Result<String, ServiceError> {
        let today = self.today()?;
        let answer = self.lists.answer(today.puzzle_id).ok_or(ServiceError::Unavailable)?;
        let token = uuid::Uuid::new_v4().simple().to_string();
        let entry = SessionEntry {
            client_id: client_id
                .filter(|c| !c.trim().is_empty())
                .unwrap_or_else(|| uuid::Uuid::new_v4().simple().to_string()),
            date: today.date,
            game: GameState::new(today.puzzle_id, answer),
            logged: false,
        };
        let mut sessions = self.sessions.lock().unwrap();
        // sessions from before yesterday can no longer be played or finalized usefully
        let cutoff = today.date - chrono::Duration::days(1);
        sessions.retain(|_, e| e.lock().map(|e| e.date >= cutoff).unwrap_or(false));
        sessions.insert(token.clone(), Arc::new(Mutex::new(entry)));
        Ok(token)
    }

    fn entry(&self, token: &str) -> Result<Arc<Mutex<SessionEntry>>, ServiceError> {
        self.sessions
            .lock()
            .unwrap()
            .get(token)
            .cloned()
            .ok_or(ServiceError::UnknownToken)
    }

    /// Scores a guess. Rejected guesses (`valid: false`) do not use up a turn.
    pub fn submit_guess(&self, token: &str, guess: &str) -> Result<GuessReply, ServiceError> {
        let entry = self.entry(token)?;
        let mut entry = entry.lock().unwrap();
        if entry.game.status().is_terminal() {
            return Err(ServiceError::Finished);
        }
        let rejected = |entry: &SessionEntry, reason| GuessReply {
            valid: false,
            reason: Some(reason),
            tiles: None,
            turn: entry.turn(),
            status: entry.game.status(),
        };
        let word = match Word::parse(guess) {
            Ok(word) => word,
            Err(WordError::OutsideAlphabet(_)) => return Ok(rejected(&entry, REASON_NOT_IN_LIST)),
            Err(_) => return Ok(rejected(&entry, REASON_MALFORMED)),
        };
        if !self.valid.contains(&word) {
            return Ok(rejected(&entry, REASON_NOT_IN_LIST));
        }
        let row = entry.game.push_guess(word).map_err(|_| ServiceError::Finished)?;
        Ok(GuessReply {
            valid: true,
            reason: None,
            tiles: Some(row.tiles),
            turn: entry.turn(),
            status: entry.game.status(),
        })
    }

    /// Writes the finished session to the log (once) and reveals the answer.
    pub fn finalize(&self, token: &str) -> Result<FinalizeReply, ServiceError> {
        let entry = self.entry(token)?;
        let mut entry = entry.lock().unwrap();
        if !entry.game.status().is_terminal() {
            return Err(ServiceError::NotFinished);
        }
        let share_text =
            render_share_grid(&entry.game, &self.config.title).map_err(|_| ServiceError::NotFinished)?;
        let already_logged = if entry.logged {
            true
        } else {
            let key = (entry.client_id.clone(), entry.game.puzzle_id());
            let mut logged = self.logged.lock().unwrap();
            if logged.contains(&key) {
                true
            } else {
                let session = Session::from_game(&entry.game, entry.date, entry.client_id.clone())
                    .map_err(|_| ServiceError::NotFinished)?;
                self.log.append(&session)?;
                logged.insert(key);
                false
            }
        };
        entry.logged = true;
        let answer = *entry.game.answer();
        Ok(FinalizeReply {
            answer,
            thesaurus_url: thesaurus_link(&answer),
            share_text,
            already_logged,
        })
    }

    /// Outcome counts for a puzzle. Today's puzzle gets counts only.
    pub fn stats(&self, puzzle_id: u32) -> Result<StatsReply, ServiceError> {
        let current = self.today().map(|t| t.puzzle_id == puzzle_id).unwrap_or(false);
        let (sessions, _) = self.log.snapshot()?;
        let distribution = guess_distribution(&sessions, puzzle_id);
        let top_openers = if current {
            None
        } else {
            let for_puzzle: Vec<&Session> = sessions.iter().filter(|s| s.puzzle_id == puzzle_id).collect();
            let top = top_guesses_by_turn(for_puzzle, 1, TOP_OPENERS).unwrap_or_default();
            Some(top.into_iter().map(|(word, count)| OpenerCount { word, count }).collect())
        };
        Ok(StatsReply {
            puzzle_id,
            current,
            distribution,
            top_openers,
        })
    }
}
