use std::io::{self, BufRead};
use std::collections::VecDeque;

use crate::text::normalize;

/// Splits one line into normalized tokens.
///
/// Tokens are whitespace-separated. Leading and trailing non-letters are
/// stripped; a token with a non-letter left inside (`e-pasts`, `3D`) is
/// dropped whole.
pub fn tokenize_line(line: &str) -> impl Iterator<Item = String> + '_ {
    line.split_whitespace().filter_map(|raw| {
        let normalized = normalize(raw);
        let trimmed = normalized.trim_matches(|c: char| !c.is_alphabetic());
        if trimmed.is_empty() || trimmed.chars().any(|c| !c.is_alphabetic()) {
            return None;
        }
        Some(trimmed.to_string())
    })
}

/// Summary of one pass over an input stream.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TokenizeSummary {
    pub lines: u64,
    pub tokens: u64,
    /// Lines skipped because they were not valid UTF-8.
    pub decode_errors: u64,
}

/// Streaming tokenizer over a line-oriented reader.
///
/// Lines that fail UTF-8 decoding are skipped and counted. An I/O error ends
/// the stream; it is returned from [`TokenStream::finish`].
pub struct TokenStream<R> {
    reader: R,
    buf: Vec<u8>,
    pending: VecDeque<String>,
    summary: TokenizeSummary,
    error: Option<io::Error>,
    done: bool,
}

impl<R: BufRead> TokenStream<R> {
    pub fn new(reader: R) -> Self {
        Self {
            reader,
            buf: Vec::new(),
            pending: VecDeque::new(),
            summary: TokenizeSummary::default(),
            error: None,
            done: false,
        }
    }

    pub fn summary(&self) -> TokenizeSummary {
        self.summary
    }

    pub fn finish(self) -> io::Result<TokenizeSummary> {
        match self.error {
            Some(e) => Err(e),
            None => Ok(self.summary),
        }
    }

    /// Returns the underlying reader and any I/O error that ended the stream.
    pub fn into_parts(self) -> (R, io::Result<()>) {
        let result = match self.error {
            Some(e) => Err(e),
            None => Ok(()),
        };
        (self.reader, result)
    }

    fn fill(&mut self) -> bool {
        while self.pending.is_empty() {
            self.buf.clear();
            match self.reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => return false,
                Ok(_) => {}
                Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
                Err(e) => {
                    self.error = Some(e);
                    return false;
                }
            }
            self.summary.lines += 1;
            match std::str::from_utf8(&self.buf) {
                Ok(line) => self.pending.extend(tokenize_line(line)),
                Err(_) => self.summary.decode_errors += 1,
            }
        }
        true
    }
}

impl<R: BufRead> Iterator for TokenStream<R> {
    type Item = String;

    fn next(&mut self) -> Option<String> {
        if self.done {
            return None;
        }
        if !self.fill() {
            self.done = true;
            return None;
        }
        self.summary.tokens += 1;
        self.pending.pop_front()
    }
}
