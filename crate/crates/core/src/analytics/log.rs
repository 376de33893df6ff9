//! Append-only JSON Lines session log.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use super::session::Session;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LogSummary {
    pub lines: usize,
    pub sessions: usize,
    /// Non-blank lines that did not parse into a valid session.
    pub skipped: usize,
}

/// Parses every line of a session log, skipping (and counting) bad lines.
pub fn read_sessions<R: BufRead>(reader: R) -> io::Result<(Vec<Session>, LogSummary)> {
    let mut sessions = Vec::new();
    let mut summary = LogSummary::default();
    for line in reader.split(b'\n') {
        let line = line?;
        summary.lines += 1;
        let Ok(text) = std::str::from_utf8(&line) else {
            summary.skipped += 1;
            continue;
        };
        if text.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<Session>(text) {
            Ok(session) => sessions.push(session),
            Err(_) => summary.skipped += 1,
        }
    }
    summary.sessions = sessions.len();
    Ok((sessions, summary))
}

pub fn read_log_file(path: &Path) -> io::Result<(Vec<Session>, LogSummary)> {
    read_sessions(BufReader::new(File::open(path)?))
}

/// Writer side of the log. Each record goes out as one `write` of a complete
/// line on an `O_APPEND` descriptor and is synced before `append` returns.
#[derive(Debug)]
pub struct SessionLog {
    path: PathBuf,
    file: Mutex<File>,
}

impl SessionLog {
    pub fn open(path: impl Into<PathBuf>) -> io::Result<Self> {
        let path = path.into();
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            std::fs::create_dir_all(parent)?;
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Self {
            path,
            file: Mutex::new(file),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, session: &Session) -> io::Result<()> {
        let mut line = serde_json::to_vec(session).map_err(io::Error::other)?;
        line.push(b'\n');
        let mut file = self.file.lock().unwrap_or_else(|e| e.into_inner());
        file.write_all(&line)?;
        file.sync_data()
    }

    /// Current contents of the log.
    pub fn snapshot(&self) -> io::Result<(Vec<Session>, LogSummary)> {
        // hold the lock so no record is read half-written
        let _guard = self.file.lock().unwrap_or_else(|e| e.into_inner());
        read_log_file(&self.path)
    }

    pub fn flush(&self) -> io::Result<()> {
        let file = self.file.lock().unwrap_or_else(|e| e.into_inner());
        file.sync_all()
    }
}
