//! C ABI over the vardle engine.
//!
//! Every fallible function returns a [`VardleStatus`]. On anything other than
//! `VARDLE_STATUS_OK`, a description is available from
//! [`vardle_last_error_message`] on the same thread until the next call.
//!
//! Strings passed in are NUL-terminated UTF-8. Strings handed out are owned by
//! the caller and must be released with [`vardle_string_free`]. Games are
//! opaque [`VardleGame`] handles released with [`vardle_game_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chrono::NaiveDate;
use vardle::engine::{daily_index, render_share_grid, score_guess, DailySchedule, EngineError, WORD_LEN};
use vardle::service::thesaurus_link;
use vardle::{GameState, GameStatus, TileState, Word};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VardleStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidWord = 3,
    GameOver = 4,
    NotFinished = 5,
    InvalidDate = 6,
    BeforeStart = 7,
    EmptySchedule = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VardleTile {
    Grey = 0,
    Orange = 1,
    Green = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VardleGameStatus {
    InProgress = 0,
    Won = 1,
    Lost = 2,
}

/// Number of tiles written by the scoring functions.
pub const VARDLE_WORD_LEN: usize = 5;
const _: () = assert!(VARDLE_WORD_LEN == WORD_LEN);

/// A game in progress or finished. Opaque to C.
pub struct VardleGame(GameState);

impl From<TileState> for VardleTile {
    fn from(t: TileState) -> Self {
        match t {
            TileState::Green => VardleTile::Green,
            TileState::Orange => VardleTile::Orange,
            TileState::Grey => VardleTile::Grey,
        }
    }
}

impl From<GameStatus> for VardleGameStatus {
    fn from(s: GameStatus) -> Self {
        match s {
            GameStatus::InProgress => VardleGameStatus::InProgress,
            GameStatus::Won => VardleGameStatus::Won,
            GameStatus::Lost => VardleGameStatus::Lost,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(VardleStatus, String);

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let status = match e {
            EngineError::InvalidWord(_) => VardleStatus::InvalidWord,
            EngineError::GameOver(_) => VardleStatus::GameOver,
            EngineError::NotFinished => VardleStatus::NotFinished,
            EngineError::BeforeStart { .. } => VardleStatus::BeforeStart,
            EngineError::EmptySchedule => VardleStatus::EmptySchedule,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).unwrap_or_default());
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

// Runs `f`, records its error for vardle_last_error_message, and maps panics.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> VardleStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            VardleStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            VardleStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(VardleStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(VardleStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn read_word(p: *const c_char, what: &str) -> Result<Word, Failure> {
    let s = read_str(p, what)?;
    Word::parse(s).map_err(|e| Failure(VardleStatus::InvalidWord, format!("{what}: {e}")))
}

fn date(y: i32, m: u32, d: u32) -> Result<NaiveDate, Failure> {
    NaiveDate::from_ymd_opt(y, m, d).ok_or_else(|| Failure(VardleStatus::InvalidDate, format!("{y}-{m}-{d} is not a date")))
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(VardleStatus::InvalidUtf8, "string contains NUL".into()))
}

unsafe fn write_tiles(out: *mut VardleTile, tiles: &[TileState; WORD_LEN]) {
    for (i, t) in tiles.iter().enumerate() {
        *out.add(i) = (*t).into();
    }
}

/// Message for the last failed call on this thread, or NULL after a success.
/// The pointer stays valid until the next vardle call on this thread.
#[no_mangle]
pub extern "C" fn vardle_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Checks that `word` is five letters of the Latvian alphabet after normalization.
///
/// # Safety
/// `word` must be NULL or a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn vardle_validate_word(word: *const c_char) -> VardleStatus {
    guard(|| read_word(word, "word").map(drop))
}

/// Scores `guess` against `answer`, writing five tiles to `out_tiles`.
///
/// # Safety
/// String arguments must be NULL or NUL-terminated; `out_tiles` must be NULL
/// or point to room for five tiles.
#[no_mangle]
pub unsafe extern "C" fn vardle_score_guess(
    answer: *const c_char,
    guess: *const c_char,
    out_tiles: *mut VardleTile,
) -> VardleStatus {
    guard(|| {
        let answer = read_word(answer, "answer")?;
        let guess = read_word(guess, "guess")?;
        if out_tiles.is_null() {
            return Err(null("out_tiles"));
        }
        write_tiles(out_tiles, &score_guess(&answer, &guess).tiles);
        Ok(())
    })
}

/// Starts a game. On success `*out_game` owns a handle for vardle_game_free.
///
/// # Safety
/// `answer` must be NULL or NUL-terminated; `out_game` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn vardle_game_new(
    puzzle_id: u32,
    answer: *const c_char,
    out_game: *mut *mut VardleGame,
) -> VardleStatus {
    guard(|| {
        if out_game.is_null() {
            return Err(null("out_game"));
        }
        let answer = read_word(answer, "answer")?;
        *out_game = Box::into_raw(Box::new(VardleGame(GameState::new(puzzle_id, answer))));
        Ok(())
    })
}

/// Plays `guess`. `out_tiles` may be NULL if the row is not needed.
/// The caller is responsible for checking the guess against a word list.
///
/// # Safety
/// `game` must come from vardle_game_new; `out_tiles` must be NULL or hold five tiles.
#[no_mangle]
pub unsafe extern "C" fn vardle_game_guess(
    game: *mut VardleGame,
    guess: *const c_char,
    out_tiles: *mut VardleTile,
) -> VardleStatus {
    guard(|| {
        let game = game.as_mut().ok_or_else(|| null("game"))?;
        let guess = read_word(guess, "guess")?;
        let row = game.0.push_guess(guess)?;
        if !out_tiles.is_null() {
            write_tiles(out_tiles, &row.tiles);
        }
        Ok(())
    })
}

/// # Safety
/// `game` must come from vardle_game_new; `out_status` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vardle_game_status(game: *const VardleGame, out_status: *mut VardleGameStatus) -> VardleStatus {
    guard(|| {
        let game = game.as_ref().ok_or_else(|| null("game"))?;
        let out = out_status.as_mut().ok_or_else(|| null("out_status"))?;
        *out = game.0.status().into();
        Ok(())
    })
}

/// Number of guesses played so far.
///
/// # Safety
/// `game` must come from vardle_game_new; `out_count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vardle_game_guess_count(game: *const VardleGame, out_count: *mut u32) -> VardleStatus {
    guard(|| {
        let game = game.as_ref().ok_or_else(|| null("game"))?;
        let out = out_count.as_mut().ok_or_else(|| null("out_count"))?;
        *out = game.0.rows().len() as u32;
        Ok(())
    })
}

/// Spoiler-free share text for a finished game. Free with vardle_string_free.
///
/// # Safety
/// `game` must come from vardle_game_new; `title` must be NULL or
/// NUL-terminated; `out_text` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vardle_game_share_text(
    game: *const VardleGame,
    title: *const c_char,
    out_text: *mut *mut c_char,
) -> VardleStatus {
    guard(|| {
        let game = game.as_ref().ok_or_else(|| null("game"))?;
        let title = read_str(title, "title")?;
        if out_text.is_null() {
            return Err(null("out_text"));
        }
        *out_text = to_c_string(render_share_grid(&game.0, title)?)?;
        Ok(())
    })
}

/// Releases a game. NULL is ignored.
///
/// # Safety
/// `game` must be NULL or come from vardle_game_new, and not be used again.
#[no_mangle]
pub unsafe extern "C" fn vardle_game_free(game: *mut VardleGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

/// Index into a main list of `list_len` words for the given calendar date.
///
/// # Safety
/// `out_index` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn vardle_daily_index(
    start_year: i32,
    start_month: u32,
    start_day: u32,
    year: i32,
    month: u32,
    day: u32,
    list_len: u32,
    out_index: *mut u32,
) -> VardleStatus {
    guard(|| {
        let out = out_index.as_mut().ok_or_else(|| null("out_index"))?;
        let schedule = DailySchedule::new(date(start_year, start_month, start_day)?, list_len)?;
        *out = daily_index(date(year, month, day)?, &schedule)?;
        Ok(())
    })
}

/// Thesaurus URL for `word`. Free with vardle_string_free.
///
/// # Safety
/// `word` must be NULL or NUL-terminated; `out_url` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vardle_thesaurus_link(word: *const c_char, out_url: *mut *mut c_char) -> VardleStatus {
    guard(|| {
        let word = read_word(word, "word")?;
        if out_url.is_null() {
            return Err(null("out_url"));
        }
        *out_url = to_c_string(thesaurus_link(&word))?;
        Ok(())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn vardle_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
