use super::game::{GameState, GameStatus, MAX_GUESSES};
use super::score::TileState;
use super::EngineError;

pub const WHITE_SQUARE: char = '\u{2B1C}';
pub const YELLOW_SQUARE: char = '\u{1F7E8}';
pub const GREEN_SQUARE: char = '\u{1F7E9}';

pub fn tile_emoji(state: TileState) -> char {
    match state {
        TileState::Green => GREEN_SQUARE,
        TileState::Orange => YELLOW_SQUARE,
        TileState::Grey => WHITE_SQUARE,
    }
}

/// Renders the spoiler-free result grid for a finished game.
///
/// ```text
/// <title> <puzzle_id> <score>/6
/// one line of squares per guess
/// ```
/// `score` is the number of guesses on a win and `X` on a loss.
pub fn render_share_grid(state: &GameState, title: &str) -> Result<String, EngineError> {
    let score = match state.status() {
        GameStatus::InProgress => return Err(EngineError::NotFinished),
        GameStatus::Won => state.rows().len().to_string(),
        GameStatus::Lost => "X".to_string(),
    };
    let mut out = format!("{title} {} {score}/{MAX_GUESSES}", state.puzzle_id());
    for row in state.rows() {
        out.push('\n');
        out.extend(row.tiles.iter().map(|&t| tile_emoji(t)));
    }
    Ok(out)
}
