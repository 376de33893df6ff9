//! On-disk formats: corpora in, list files and build metadata out.

use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::lists::{ListMetadata, ReviewEntry, WordLists};
use super::report::{write_length_csv, LengthRow};
use super::stats::CorpusStats;
use super::tokenize::{TokenStream, TokenizeSummary};
use crate::engine::{Alphabet, Word};

pub const MAIN_FILE: &str = "main.txt";
pub const SECONDARY_FILE: &str = "secondary.txt";
pub const REVIEW_FILE: &str = "review_report.txt";
pub const LENGTH_FILE: &str = "length_distribution.csv";
pub const META_FILE: &str = "build_meta.json";

#[derive(Debug, thiserror::Error)]
pub enum ListFileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}:{line}: {word:?} is not a valid word")]
    InvalidWord { path: PathBuf, line: usize, word: String },
    #[error("{path}:{line}: duplicate entry {word}")]
    Duplicate { path: PathBuf, line: usize, word: Word },
    #[error("{word} is in both the main and the secondary list")]
    Overlap { word: Word },
    #[error("{path}: {source}")]
    Meta {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> ListFileError + '_ {
    move |source| ListFileError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Reader adaptor that hashes everything read through it.
pub struct HashingReader<R> {
    inner: R,
    hasher: Sha256,
}

impl<R: Read> HashingReader<R> {
    pub fn new(inner: R) -> Self {
        Self {
            inner,
            hasher: Sha256::new(),
        }
    }

    pub fn hex_digest(self) -> String {
        hex::encode(self.hasher.finalize())
    }
}

impl<R: Read> Read for HashingReader<R> {
    fn read(&mut self, buf: &mut [u8]) -> io::Result<usize> {
        let n = self.inner.read(buf)?;
        self.hasher.update(&buf[..n]);
        Ok(n)
    }
}

pub fn file_digest(path: &Path) -> io::Result<String> {
    let mut reader = HashingReader::new(File::open(path)?);
    io::copy(&mut reader, &mut io::sink())?;
    Ok(reader.hex_digest())
}

/// Regular, non-hidden files directly under `dir`, sorted by name. A plain
/// file path is returned as is.
pub fn corpus_files(path: &Path) -> io::Result<Vec<PathBuf>> {
    if path.is_file() {
        return Ok(vec![path.to_path_buf()]);
    }
    let mut files = Vec::new();
    for entry in fs::read_dir(path)? {
        let entry = entry?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if !hidden && entry.file_type()?.is_file() {
            files.push(entry.path());
        }
    }
    files.sort();
    Ok(files)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusFileStats {
    pub path: PathBuf,
    pub digest: String,
    pub summary: TokenizeSummary,
}

/// Tokenizes and counts one corpus file in a single pass, hashing it on the way.
pub fn count_corpus_file(path: &Path, alphabet: &Alphabet) -> Result<(CorpusStats, CorpusFileStats), ListFileError> {
    let file = File::open(path).map_err(io_err(path))?;
    let mut stream = TokenStream::new(BufReader::with_capacity(1 << 16, HashingReader::new(file)));
    let mut stats = CorpusStats::new();
    for token in stream.by_ref() {
        stats.add_token(&token, alphabet);
    }
    let summary = stream.summary();
    let (reader, result) = stream.into_parts();
    result.map_err(io_err(path))?;
    Ok((
        stats,
        CorpusFileStats {
            path: path.to_path_buf(),
            digest: reader.into_inner().hex_digest(),
            summary,
        },
    ))
}

/// Counts every file, spreading them over `threads` workers, and merges the
/// results. The merged stats do not depend on scheduling.
pub fn count_corpus_files(
    files: &[PathBuf],
    alphabet: &Alphabet,
    threads: usize,
) -> Result<(CorpusStats, Vec<CorpusFileStats>), ListFileError> {
    let threads = threads.clamp(1, files.len().max(1));
    let results: Vec<Result<Vec<(CorpusStats, CorpusFileStats)>, ListFileError>> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    scope.spawn(move || {
                        files
                            .iter()
                            .skip(t)
                            .step_by(threads)
                            .map(|p| count_corpus_file(p, alphabet))
                            .collect()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("corpus worker panicked")).collect()
        });

    let mut total = CorpusStats::new();
    let mut per_file = Vec::with_capacity(files.len());
    for chunk in results {
        for (stats, file_stats) in chunk? {
            total.merge(stats);
            per_file.push(file_stats);
        }
    }
    per_file.sort_by(|a, b| a.path.cmp(&b.path));
    Ok((total, per_file))
}

fn write_words<'a>(path: &Path, words: impl Iterator<Item = &'a Word>) -> Result<(), ListFileError> {
    let mut out = BufWriter::new(File::create(path).map_err(io_err(path))?);
    for word in words {
        writeln!(out, "{word}").map_err(io_err(path))?;
    }
    out.flush().map_err(io_err(path))
}

pub fn write_review(path: &Path, review: &[ReviewEntry], k_main: usize) -> Result<(), ListFileError> {
    let mut out = BufWriter::new(File::create(path).map_err(io_err(path))?);
    let write = |out: &mut BufWriter<File>| -> io::Result<()> {
        writeln!(out, "# Candidates ranked within the main list fill (k_main = {k_main}) that the lexicon did not confirm.")?;
        writeln!(out, "# Keep a word by adding it to the lexicon and rebuilding.")?;
        writeln!(out, "# rank\tword\tfrequency")?;
        for entry in review {
            writeln!(out, "{}\t{}\t{}", entry.rank, entry.word, entry.frequency)?;
        }
        out.flush()
    };
    write(&mut out).map_err(io_err(path))
}

/// Writes `main.txt`, `secondary.txt`, `review_report.txt`,
/// `length_distribution.csv` and `build_meta.json` into `dir`.
pub fn write_outputs(
    dir: &Path,
    lists: &WordLists,
    review: &[ReviewEntry],
    lengths: &[LengthRow],
) -> Result<(), ListFileError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    write_words(&dir.join(MAIN_FILE), lists.main.iter())?;
    write_words(&dir.join(SECONDARY_FILE), lists.secondary.iter())?;
    write_review(&dir.join(REVIEW_FILE), review, lists.metadata.k_main)?;

    let length_path = dir.join(LENGTH_FILE);
    let file = File::create(&length_path).map_err(io_err(&length_path))?;
    write_length_csv(lengths, BufWriter::new(file)).map_err(|source| ListFileError::Csv {
        path: length_path.clone(),
        source,
    })?;

    let meta_path = dir.join(META_FILE);
    let meta = BuildMeta::new(lists, review.len());
    let mut json = serde_json::to_string_pretty(&meta).map_err(|source| ListFileError::Meta {
        path: meta_path.clone(),
        source,
    })?;
    json.push('\n');
    fs::write(&meta_path, json).map_err(io_err(&meta_path))
}

#[derive(Debug, serde::Serialize, serde::Deserialize)]
struct BuildMeta {
    #[serde(flatten)]
    metadata: ListMetadata,
    main_count: usize,
    secondary_count: usize,
    review_count: usize,
}

impl BuildMeta {
    fn new(lists: &WordLists, review_count: usize) -> Self {
        Self {
            metadata: lists.metadata.clone(),
            main_count: lists.main.len(),
            secondary_count: lists.secondary.len(),
            review_count,
        }
    }
}

fn read_words(path: &Path) -> Result<Vec<Word>, ListFileError> {
    let reader = BufReader::new(File::open(path).map_err(io_err(path))?);
    let mut words = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        let entry = line.trim();
        if entry.is_empty() {
            continue;
        }
        let word = Word::parse(entry).map_err(|_| ListFileError::InvalidWord {
            path: path.to_path_buf(),
            line: i + 1,
            word: entry.to_string(),
        })?;
        if !seen.insert(word) {
            return Err(ListFileError::Duplicate {
                path: path.to_path_buf(),
                line: i + 1,
                word,
            });
        }
        words.push(word);
    }
    Ok(words)
}

/// Loads `main.txt` and `secondary.txt` (and `build_meta.json` when present)
/// from `dir`, checking every entry is a word and the lists are disjoint.
/// A missing `secondary.txt` reads as empty.
pub fn load_lists(dir: &Path) -> Result<WordLists, ListFileError> {
    let main = read_words(&dir.join(MAIN_FILE))?;
    let secondary_path = dir.join(SECONDARY_FILE);
    let secondary: BTreeSet<Word> = if secondary_path.exists() {
        read_words(&secondary_path)?.into_iter().collect()
    } else {
        BTreeSet::new()
    };
    if let Some(word) = main.iter().find(|w| secondary.contains(w)) {
        return Err(ListFileError::Overlap { word: *word });
    }
    let meta_path = dir.join(META_FILE);
    let metadata = if meta_path.exists() {
        let text = fs::read_to_string(&meta_path).map_err(io_err(&meta_path))?;
        let meta: BuildMeta = serde_json::from_str(&text).map_err(|source| ListFileError::Meta {
            path: meta_path.clone(),
            source,
        })?;
        meta.metadata
    } else {
        ListMetadata::default()
    };
    Ok(WordLists {
        main,
        secondary,
        metadata,
    })
}
