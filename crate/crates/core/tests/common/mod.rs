//! Shared test support: fixtures, independent oracles and helpers.
#![allow(dead_code)]

pub mod dot;
pub mod process;
pub mod server;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::{Path, PathBuf};

use chrono::NaiveDate;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vardle::analytics::{Bucket, Outcome, Session};
use vardle::engine::{TileState, Word};

pub fn fixture_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

pub fn words200() -> Vec<Word> {
    std::fs::read_to_string(fixture_path("words200.txt"))
        .unwrap()
        .lines()
        .filter(|l| !l.is_empty())
        .map(w)
        .collect()
}

/// Tile colouring found by enumerating all 3^5 assignments and keeping the
/// one that satisfies the colouring rules stated as constraints:
///
/// 1. a tile is green exactly when guess and answer agree at that position;
/// 2. for each letter, the number of orange tiles equals
///    min(unmatched copies in the answer, unmatched copies in the guess);
/// 3. those orange tiles are the leftmost unmatched copies in the guess.
///
/// Panics unless exactly one assignment qualifies.
pub fn oracle_score(answer: &Word, guess: &Word) -> [TileState; 5] {
    let a: Vec<char> = answer.to_string().chars().collect();
    let g: Vec<char> = guess.to_string().chars().collect();
    let states = [TileState::Green, TileState::Orange, TileState::Grey];
    let mut found = Vec::new();
    for code in 0..243u32 {
        let mut tiles = [TileState::Grey; 5];
        let mut c = code;
        for t in tiles.iter_mut() {
            *t = states[(c % 3) as usize];
            c /= 3;
        }
        let greens_ok = (0..5).all(|i| (tiles[i] == TileState::Green) == (a[i] == g[i]));
        if !greens_ok {
            continue;
        }
        let letters: BTreeSet<char> = g.iter().copied().collect();
        let oranges_ok = letters.iter().all(|&l| {
            let unmatched_answer = (0..5).filter(|&i| a[i] == l && g[i] != l).count();
            let unmatched_guess: Vec<usize> = (0..5).filter(|&i| g[i] == l && a[i] != l).collect();
            let want = unmatched_answer.min(unmatched_guess.len());
            unmatched_guess
                .iter()
                .enumerate()
                .all(|(k, &i)| (tiles[i] == TileState::Orange) == (k < want))
        });
        if oranges_ok {
            found.push(tiles);
        }
    }
    assert_eq!(found.len(), 1, "oracle ambiguity for {answer} / {guess}");
    found[0]
}

pub fn random_word(rng: &mut StdRng) -> Word {
    let alphabet = vardle::engine::LATVIAN_LETTERS;
    // small pool per word so repeated letters are common
    let pool: Vec<char> = (0..3).map(|_| alphabet[rng.random_range(0..alphabet.len())]).collect();
    let s: String = (0..5)
        .map(|_| {
            if rng.random_bool(0.5) {
                pool[rng.random_range(0..pool.len())]
            } else {
                alphabet[rng.random_range(0..alphabet.len())]
            }
        })
        .collect();
    w(&s)
}

pub fn date(y: i32, m: u32, d: u32) -> NaiveDate {
    NaiveDate::from_ymd_opt(y, m, d).unwrap()
}

/// `n` valid sessions over `puzzles`, dated within a month from 2022-01-28.
pub fn synthetic_sessions(seed: u64, n: usize, puzzles: &BTreeMap<u32, Word>, vocab: &[Word]) -> Vec<Session> {
    let mut rng = StdRng::seed_from_u64(seed);
    let ids: Vec<u32> = puzzles.keys().copied().collect();
    let start = date(2022, 1, 28);
    (0..n)
        .map(|i| {
            let id = ids[rng.random_range(0..ids.len())];
            let answer = puzzles[&id];
            let day = start + chrono::Duration::days(i64::from(id) + rng.random_range(0..3));
            let won = rng.random_bool(0.8);
            let len = if won { rng.random_range(1..=6) } else { 6 };
            let mut guesses = Vec::with_capacity(len);
            while guesses.len() < len - usize::from(won) {
                // a Zipf-ish pick so popular words repeat
                let k = (rng.random::<f64>().powi(3) * vocab.len() as f64) as usize;
                let g = vocab[k.min(vocab.len() - 1)];
                if g != answer {
                    guesses.push(g);
                }
            }
            let outcome = if won {
                guesses.push(answer);
                Outcome::Won { turn: len as u8 }
            } else {
                Outcome::Lost
            };
            Session::new(id, day, format!("client-{i}"), guesses, outcome).unwrap()
        })
        .collect()
}

/// Naive per-bucket recount.
pub fn naive_distribution(sessions: &[Session], puzzle_id: u32) -> BTreeMap<Bucket, u64> {
    Bucket::ALL
        .iter()
        .map(|&b| {
            let n = sessions
                .iter()
                .filter(|s| s.puzzle_id == puzzle_id)
                .filter(|s| match (b, s.outcome()) {
                    (Bucket::Failed, Outcome::Lost) => true,
                    (Bucket::Turn(t), Outcome::Won { turn }) => t == turn,
                    _ => false,
                })
                .count() as u64;
            (b, n)
        })
        .collect()
}

/// Counts each word at `turn` by scanning every session once per word.
pub fn naive_top(sessions: &[Session], turn: usize, n: usize) -> Vec<(Word, u64)> {
    let words: BTreeSet<Word> = sessions.iter().filter_map(|s| s.guesses().get(turn - 1).copied()).collect();
    let mut counted: Vec<(Word, u64)> = words
        .into_iter()
        .map(|word| {
            let c = sessions.iter().filter(|s| s.guesses().get(turn - 1) == Some(&word)).count() as u64;
            (word, c)
        })
        .collect();
    // selection by repeated max, independent of sort_by
    let mut out = Vec::new();
    while out.len() < n && !counted.is_empty() {
        let mut best = 0;
        for i in 1..counted.len() {
            let (bw, bc) = counted[best];
            let (cw, cc) = counted[i];
            if cc > bc || (cc == bc && cw < bw) {
                best = i;
            }
        }
        out.push(counted.remove(best));
    }
    out
}

/// Rebuilds the guessed-word set from scratch for every day.
pub fn naive_timeline(sessions: &[Session]) -> Vec<(NaiveDate, usize)> {
    let Some(first) = sessions.iter().map(|s| s.date).min() else {
        return Vec::new();
    };
    let last = sessions.iter().map(|s| s.date).max().unwrap();
    let mut out = Vec::new();
    let mut day = first;
    while day <= last {
        let set: BTreeSet<Word> = sessions
            .iter()
            .filter(|s| s.date <= day)
            .flat_map(|s| s.guesses().iter().copied())
            .collect();
        out.push((day, set.len()));
        day = day.succ_opt().unwrap();
    }
    out
}

/// Edge weights by direct pair recount.
pub fn naive_paths(sessions: &[Session], puzzle_id: u32) -> HashMap<(Word, Word, u8), u64> {
    let mut out = HashMap::new();
    for s in sessions.iter().filter(|s| s.puzzle_id == puzzle_id) {
        let g = s.guesses();
        for i in 0..g.len().saturating_sub(1) {
            *out.entry((g[i], g[i + 1], (i + 1) as u8)).or_insert(0) += 1;
        }
    }
    out
}

/// Difficulty order by brute force: repeatedly pick the hardest remaining puzzle.
pub fn naive_difficulty(sessions: &[Session], puzzles: &BTreeMap<u32, Word>) -> Vec<(u32, u64, u64)> {
    let mut rows: Vec<(u32, Word, u64, u64)> = puzzles
        .iter()
        .map(|(&id, &word)| {
            let mine: Vec<&Session> = sessions.iter().filter(|s| s.puzzle_id == id).collect();
            let fails = mine.iter().filter(|s| !s.is_won()).count() as u64;
            (id, word, fails, mine.len() as u64)
        })
        .collect();
    let harder = |a: &(u32, Word, u64, u64), b: &(u32, Word, u64, u64)| -> bool {
        if a.2 != b.2 {
            return a.2 > b.2;
        }
        let fa = if a.3 == 0 { 0.0 } else { a.2 as f64 / a.3 as f64 };
        let fb = if b.3 == 0 { 0.0 } else { b.2 as f64 / b.3 as f64 };
        if fa != fb {
            return fa > fb;
        }
        if a.1 != b.1 {
            return a.1 < b.1;
        }
        a.0 < b.0
    };
    let mut out = Vec::new();
    while !rows.is_empty() {
        let mut best = 0;
        for i in 1..rows.len() {
            if harder(&rows[i], &rows[best]) {
                best = i;
            }
        }
        let r = rows.remove(best);
        out.push((r.0, r.2, r.3));
    }
    out
}

/// Ten puzzles drawn from the fixture list.
pub fn ten_puzzles() -> BTreeMap<u32, Word> {
    let words = words200();
    (0..10u32).map(|i| (i, words[i as usize * 7])).collect()
}

/// A synthetic corpus with known token counts.
pub struct PlantedCorpus {
    pub lines: Vec<String>,
    /// Normalized token -> occurrences, every token the tokenizer should emit.
    pub counts: BTreeMap<String, u64>,
    /// Five-letter Latvian words in planted frequency order (no ties).
    pub ranked_candidates: Vec<String>,
    /// Words the lexicon file should contain.
    pub lexicon: Vec<String>,
}

/// Builds `n_lines` lines from a planted multiset. Surface forms vary in case,
/// edge punctuation and Unicode composition; all of them normalize back to
/// the planted token. Tokens the tokenizer drops whole are mixed in as noise.
pub fn planted_corpus(seed: u64, n_lines: usize) -> PlantedCorpus {
    use unicode_normalization::UnicodeNormalization;
    let mut rng = StdRng::seed_from_u64(seed);

    let candidates = [
        "SAULE", "CHINA", "SIENA", "TIESA", "DIENA", "LAIME", "PIENS", "MAIZE", "LIEPA", "SAITE", "KASTE", "ĀBOLS",
        "KAĶIS", "APPLE", "IELAS", "SKOLA", "LAIKS", "CĪŅAS", "ŠUVES", "TĪRĪT", "VĒLĀK", "GARĀM", "KURSĀ", "FLĪŽU",
        "RAIŅA", "BAUDU", "MAIGI", "BIEŽA", "CELTA", "PLAŠA",
    ];
    let foreign = ["CHINA", "APPLE"];
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for (i, word) in candidates.iter().enumerate() {
        counts.insert(word.to_string(), 400 - 12 * i as u64);
    }
    // non-candidates: letters outside the alphabet, or other lengths
    for (word, n) in [
        ("WORLD", 500), ("QUOTE", 90), ("IR", 700), ("UN", 650), ("AR", 300), ("UZ", 120), ("SĒTA", 80),
        ("PUĶE", 60), ("SAULES", 150), ("SKOLĒNI", 40), ("A", 200), ("LATVIJA", 75), ("PAVASARIS", 20),
        ("XYZZY", 33),
    ] {
        counts.insert(word.to_string(), n);
    }

    let mut bag: Vec<&str> = Vec::new();
    for (word, &n) in &counts {
        bag.extend(std::iter::repeat_n(word.as_str(), n as usize));
    }
    for _ in 0..600 {
        bag.push(["e-pasts", "a1b", "\u{2014}", "123", "...", "x2y", "2022-01-28"][rng.random_range(0..7)]);
    }
    for i in (1..bag.len()).rev() {
        bag.swap(i, rng.random_range(0..=i));
    }

    let surface = |rng: &mut StdRng, token: &str| -> String {
        if !token.chars().next().is_some_and(char::is_alphabetic) || token.contains('-') || token.chars().any(|c| c.is_ascii_digit()) {
            return token.to_string();
        }
        let mut s = match rng.random_range(0..3) {
            0 => token.to_string(),
            1 => token.to_lowercase(),
            _ => {
                let lower = token.to_lowercase();
                let mut cs = lower.chars();
                cs.next().map(|c| c.to_uppercase().chain(cs).collect()).unwrap_or_default()
            }
        };
        if rng.random_bool(0.3) {
            s = s.nfd().collect();
        }
        let pre = ["", "", "", "(", "«", "\""][rng.random_range(0..6)];
        let post = ["", "", "", ",", ".", "!", "?", ")", "»", ":", "\";"][rng.random_range(0..11)];
        format!("{pre}{s}{post}")
    };

    let mut lines = vec![String::new(); n_lines];
    for (i, token) in bag.iter().enumerate() {
        let line = if i < n_lines { i } else { rng.random_range(0..n_lines) };
        let s = surface(&mut rng, token);
        if !lines[line].is_empty() {
            lines[line].push(if rng.random_bool(0.9) { ' ' } else { '\t' });
        }
        lines[line].push_str(&s);
    }

    let ranked_candidates = candidates.iter().map(|s| s.to_string()).collect();
    let lexicon = candidates
        .iter()
        .filter(|w| !foreign.contains(w))
        .map(|s| s.to_string())
        .chain(["IR", "UN", "SĒTA", "PUĶE", "PUĶES", "SAULES"].map(String::from))
        .collect();
    PlantedCorpus {
        lines,
        counts,
        ranked_candidates,
        lexicon,
    }
}

/// Per-length (unique, total) counts straight from the planted multiset.
pub fn planted_lengths(counts: &BTreeMap<String, u64>) -> BTreeMap<usize, (u64, u64)> {
    let mut out: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
    for (word, &n) in counts {
        let e = out.entry(word.chars().count()).or_default();
        e.0 += 1;
        e.1 += n;
    }
    out
}

/// Writes a corpus directory, lexicon and inflection table under `root`.
pub fn write_build_inputs(root: &Path, corpus: &PlantedCorpus) -> (PathBuf, PathBuf, PathBuf) {
    let corpus_dir = root.join("corpus");
    std::fs::create_dir_all(&corpus_dir).unwrap();
    // split across files to exercise the parallel merge
    for (k, chunk) in corpus.lines.chunks(corpus.lines.len().div_ceil(3).max(1)).enumerate() {
        std::fs::write(corpus_dir.join(format!("part{k}.txt")), chunk.join("\n") + "\n").unwrap();
    }
    let lexicon = root.join("lexicon.txt");
    std::fs::write(&lexicon, corpus.lexicon.iter().map(|w| w.to_lowercase()).collect::<Vec<_>>().join("\n") + "\n").unwrap();
    let inflections = root.join("inflections.tsv");
    std::fs::write(
        &inflections,
        "puķe\tpuķe\npuķe\tpuķes\npuķe\tpuķei\npuķe\tpuķēm\nsaule\tsaule\nsaule\tsaules\nsaule\tsaulē\nbroken row\nsaule\tsaulei\n",
    )
    .unwrap();
    (corpus_dir, lexicon, inflections)
}
