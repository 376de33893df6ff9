//! Word-list construction from raw corpora.
//!
//! Corpora are tokenized and counted, five-letter alphabet-only tokens are
//! ranked by frequency, and the ranking is split into a main list of daily
//! answers and a secondary list of extra valid guesses, both cross-checked
//! against a lexicon. Inflected forms from a precomputed table can then be
//! merged into the secondary list.

mod files;
mod lexicon;
mod lists;
mod report;
mod stats;
mod tokenize;

pub use files::{
    corpus_files, count_corpus_file, count_corpus_files, file_digest, load_lists, write_outputs,
    write_review, CorpusFileStats, HashingReader, ListFileError, LENGTH_FILE, MAIN_FILE, META_FILE,
    REVIEW_FILE, SECONDARY_FILE,
};
pub use lexicon::{InflectionTable, Lexicon, TableLoad, LEMMA_LENGTHS};
pub use lists::{
    build_lists, merge_inflections, BuildError, BuildOutcome, ListMetadata, ReviewEntry, WordLists,
    DEFAULT_K_MAIN, DEFAULT_K_SECONDARY,
};
pub use report::{length_distribution_report, write_length_csv, LengthRow};
pub use stats::{count_frequencies, is_candidate, CorpusStats, LengthCount, MAX_TRACKED_LENGTH};
pub use tokenize::{tokenize_line, TokenStream, TokenizeSummary};
