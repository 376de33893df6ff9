//! HTTP backend. The answer never leaves the server until a session is
//! finished; finished sessions are appended to a JSON Lines log.
//!
//! | method | path | reply |
//! |---|---|---|
//! | GET | `/api/puzzle/today` | `{puzzle_id, date}` |
//! | POST | `/api/session` | `{token}` |
//! | POST | `/api/session/{token}/guess` | `{valid, reason?, tiles?, turn, status}` |
//! | POST | `/api/session/{token}/finalize` | `{answer, thesaurus_url, share_text, already_logged}` |
//! | GET | `/api/stats/{puzzle_id}` | `{puzzle_id, current, distribution, top_openers?}` |

mod clock;
mod http;
mod links;
mod state;

pub use clock::{Clock, ManualClock, SystemClock};
pub use http::{router, serve, shutdown_signal};
pub use links::{thesaurus_link, THESAURUS_BASE};
pub use state::{
    FinalizeReply, GameService, GuessReply, OpenerCount, PuzzleRef, ServiceConfig, ServiceError, StatsReply,
    DEFAULT_TITLE, REASON_MALFORMED, REASON_NOT_IN_LIST,
};
