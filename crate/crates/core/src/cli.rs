//! `vardle` command line: `build-lists`, `analyze` and `serve`.
//!
//! Exit codes: 0 success, 1 finished with warnings, 2 usage or environment
//! error. Progress goes to stderr; a JSON summary goes to stdout.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use chrono::{NaiveDate, Utc};
use chrono_tz::Tz;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analytics::{
    difficulty_ranking, export_dot, guess_path_graph, read_log_file, top_guesses_by_turn, unique_forms_timeline,
    write_difficulty_csv, write_distribution_csv, write_timeline_csv, write_top_guesses_csv, guess_distribution,
    Session, SessionLog, DEFAULT_TOP_N,
};
use crate::engine::{Alphabet, Word, MAX_GUESSES};
use crate::service::{serve, shutdown_signal, GameService, ServiceConfig, SystemClock, DEFAULT_TITLE};
use crate::wordlists::{
    build_lists, corpus_files, count_corpus_files, file_digest, length_distribution_report, load_lists,
    merge_inflections, write_outputs, InflectionTable, Lexicon, DEFAULT_K_MAIN, DEFAULT_K_SECONDARY,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_WARNINGS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "vardle", version, about = "Daily Latvian word game: list builder, analytics and server")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the main and secondary word lists from raw corpora.
    BuildLists(BuildListsArgs),
    /// Write analytics reports from a session log.
    Analyze(AnalyzeArgs),
    /// Run the HTTP game server.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct BuildListsArgs {
    /// Directory of UTF-8 corpus files, one sentence per line (or a single file).
    #[arg(long)]
    pub corpus: PathBuf,
    /// Lexicon file, one entry per line.
    #[arg(long)]
    pub lexicon: PathBuf,
    /// Inflection table, `lemma<TAB>form` per line.
    #[arg(long)]
    pub inflections: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = DEFAULT_K_MAIN)]
    pub k_main: usize,
    #[arg(long, default_value_t = DEFAULT_K_SECONDARY)]
    pub k_secondary: usize,
    /// Worker threads for corpus counting (default: available cores).
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Report {
    Distribution,
    Difficulty,
    TopGuesses,
    Timeline,
    Paths,
    All,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Session log (JSON Lines).
    #[arg(long, env = "VARDLE_LOG_PATH")]
    pub log: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Reports to write; repeatable. Defaults to all.
    #[arg(long = "report", value_enum)]
    pub reports: Vec<Report>,
    /// Limit per-puzzle reports (distribution, paths) to one puzzle.
    #[arg(long)]
    pub puzzle: Option<u32>,
    /// Limit top-guesses to one turn (1-6).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    pub turn: Option<u8>,
    #[arg(long, default_value_t = DEFAULT_TOP_N)]
    pub top: usize,
    /// Drop path-graph edges taken fewer times than this.
    #[arg(long, default_value_t = 1)]
    pub min_weight: u64,
    /// Lists directory; `main.txt` resolves puzzle ids to answers.
    #[arg(long, env = "VARDLE_LISTS_DIR")]
    pub lists_dir: Option<PathBuf>,
}

fn parse_tz(s: &str) -> Result<Tz, String> {
    s.parse::<Tz>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, env = "VARDLE_LISTS_DIR")]
    pub lists_dir: PathBuf,
    #[arg(long, env = "VARDLE_LOG_PATH", default_value = "sessions.jsonl")]
    pub log_path: PathBuf,
    /// Date of puzzle 0.
    #[arg(long, env = "VARDLE_START_DATE", default_value = "2022-01-28")]
    pub start_date: NaiveDate,
    /// Time zone that decides when the daily word changes.
    #[arg(long, env = "VARDLE_TZ", default_value = "Europe/Riga", value_parser = parse_tz)]
    pub tz: Tz,
    #[arg(long, env = "VARDLE_BIND_ADDR", default_value = "127.0.0.1:8080")]
    pub bind: SocketAddr,
    /// Title used in share texts.
    #[arg(long, default_value = DEFAULT_TITLE)]
    pub title: String,
}

/// Parses `args` and runs the chosen subcommand; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::BuildLists(args) => cmd_build_lists(&args),
        Command::Analyze(args) => cmd_analyze(&args),
        Command::Serve(args) => cmd_serve(&args),
    }
}

fn fail(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn require(path: &Path, what: &str) -> Result<(), i32> {
    if path.exists() {
        Ok(())
    } else {
        Err(fail(format!("{what} {} does not exist", path.display())))
    }
}

pub fn cmd_build_lists(args: &BuildListsArgs) -> i32 {
    let checks = [
        require(&args.corpus, "corpus"),
        require(&args.lexicon, "lexicon"),
        args.inflections.as_deref().map_or(Ok(()), |p| require(p, "inflection table")),
    ];
    if let Some(Err(code)) = checks.into_iter().find(Result::is_err) {
        return code;
    }
    if args.k_main == 0 || args.k_secondary == 0 {
        return fail("--k-main and --k-secondary must be positive");
    }

    let files = match corpus_files(&args.corpus) {
        Ok(files) => files,
        Err(e) => return fail(format!("reading {}: {e}", args.corpus.display())),
    };
    let threads = args
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    eprintln!("counting {} corpus file(s) on {threads} thread(s)", files.len());
    let (stats, per_file) = match count_corpus_files(&files, Alphabet::latvian(), threads) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let decode_errors: u64 = per_file.iter().map(|f| f.summary.decode_errors).sum();
    if decode_errors > 0 {
        eprintln!("warning: skipped {decode_errors} line(s) that were not valid UTF-8");
    }

    let lexicon = match File::open(&args.lexicon).and_then(|f| Lexicon::from_reader(BufReader::new(f))) {
        Ok(l) => l,
        Err(e) => return fail(format!("reading {}: {e}", args.lexicon.display())),
    };
    let outcome = match build_lists(&stats, &lexicon, args.k_main, args.k_secondary) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    let mut lists = outcome.lists;

    let mut sources = BTreeMap::new();
    for f in &per_file {
        let name = f.path.file_name().map_or_else(|| f.path.display().to_string(), |n| n.to_string_lossy().into_owned());
        sources.insert(format!("corpus:{name}"), f.digest.clone());
    }
    match file_digest(&args.lexicon) {
        Ok(d) => sources.insert("lexicon".to_string(), d),
        Err(e) => return fail(format!("reading {}: {e}", args.lexicon.display())),
    };

    let mut inflection_skipped = 0;
    if let Some(path) = &args.inflections {
        let loaded = File::open(path).and_then(|f| InflectionTable::from_reader(BufReader::new(f)));
        let (table, load) = match loaded {
            Ok(t) => t,
            Err(e) => return fail(format!("reading {}: {e}", path.display())),
        };
        inflection_skipped = load.skipped;
        if load.skipped > 0 {
            eprintln!("warning: skipped {} malformed inflection row(s)", load.skipped);
        }
        lists = merge_inflections(&lists, &table);
        match file_digest(path) {
            Ok(d) => sources.insert("inflections".to_string(), d),
            Err(e) => return fail(format!("reading {}: {e}", path.display())),
        };
    }
    lists.metadata.sources = sources;
    lists.metadata.built_at = Some(Utc::now());

    let lengths = length_distribution_report(&stats);
    if let Err(e) = write_outputs(&args.out, &lists, &outcome.review, &lengths) {
        return fail(e);
    }

    let summary = json!({
        "main": lists.main.len(),
        "secondary": lists.secondary.len(),
        "review": outcome.review.len(),
        "candidates": stats.token_frequencies().len(),
        "decode_errors": decode_errors,
        "inflection_rows_skipped": inflection_skipped,
    });
    println!("{summary}");
    eprintln!(
        "wrote {} main, {} secondary, {} for review to {}",
        lists.main.len(),
        lists.secondary.len(),
        outcome.review.len(),
        args.out.display()
    );

    if lists.main.is_empty() || lists.secondary.is_empty() {
        eprintln!("warning: a result list is empty");
        return EXIT_WARNINGS;
    }
    EXIT_OK
}

fn write_file(path: &Path, write: impl FnOnce(&mut BufWriter<File>) -> Result<(), Box<dyn std::error::Error>>) -> Result<(), String> {
    let file = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut out = BufWriter::new(file);
    write(&mut out).map_err(|e| format!("{}: {e}", path.display()))?;
    out.flush().map_err(|e| format!("{}: {e}", path.display()))
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> i32 {
    let (sessions, summary) = match read_log_file(&args.log) {
        Ok(r) => r,
        Err(e) => return fail(format!("reading {}: {e}", args.log.display())),
    };
    if summary.skipped > 0 {
        eprintln!("warning: skipped {} unparseable log line(s)", summary.skipped);
    }
    let explicit: BTreeSet<Report> = args.reports.iter().copied().collect();
    let all = explicit.is_empty() || explicit.contains(&Report::All);
    let wants = |r: Report| all || explicit.contains(&r);

    let main_list: Option<Vec<Word>> = match &args.lists_dir {
        Some(dir) => match load_lists(dir) {
            Ok(lists) => Some(lists.main),
            Err(e) => return fail(e),
        },
        None => None,
    };
    if explicit.contains(&Report::Difficulty) && main_list.is_none() {
        return fail("--report difficulty needs --lists-dir to resolve answers");
    }
    if let Err(e) = fs::create_dir_all(&args.out) {
        return fail(format!("{}: {e}", args.out.display()));
    }

    let puzzle_ids: BTreeSet<u32> = match args.puzzle {
        Some(id) => [id].into(),
        None => sessions.iter().map(|s| s.puzzle_id).collect(),
    };
    let mut written: Vec<String> = Vec::new();
    let mut warnings = 0;
    let mut emit = |name: String, result: Result<(), String>| -> Result<(), i32> {
        match result {
            Ok(()) => {
                written.push(name);
                Ok(())
            }
            Err(e) => Err(fail(e)),
        }
    };

    let result: Result<(), i32> = (|| {
        if wants(Report::Distribution) {
            for &id in &puzzle_ids {
                let name = format!("distribution_{id}.csv");
                let dist = guess_distribution(&sessions, id);
                emit(name.clone(), write_file(&args.out.join(&name), |w| Ok(write_distribution_csv(&dist, w)?)))?;
            }
        }
        if wants(Report::Difficulty) {
            match &main_list {
                Some(main) => {
                    let puzzles: BTreeMap<u32, Word> = sessions
                        .iter()
                        .map(|s| s.puzzle_id)
                        .filter_map(|id| main.get(id as usize).map(|w| (id, *w)))
                        .collect();
                    let ranking = difficulty_ranking(&sessions, &puzzles);
                    if ranking.skipped > 0 {
                        eprintln!("warning: {} session(s) did not match a known puzzle", ranking.skipped);
                    }
                    let name = "difficulty.csv".to_string();
                    emit(name.clone(), write_file(&args.out.join(&name), |w| Ok(write_difficulty_csv(&ranking, w)?)))?;
                }
                None => {
                    eprintln!("warning: skipping difficulty report, no --lists-dir given");
                    warnings += 1;
                }
            }
        }
        if wants(Report::TopGuesses) {
            let turns: Vec<usize> = match args.turn {
                Some(t) => vec![usize::from(t)],
                None => (1..=MAX_GUESSES).collect(),
            };
            let scoped: Vec<&Session> = sessions
                .iter()
                .filter(|s| args.puzzle.is_none_or(|p| s.puzzle_id == p))
                .collect();
            for turn in turns {
                let top = top_guesses_by_turn(scoped.iter().copied(), turn, args.top).map_err(fail)?;
                let name = format!("top_guesses_turn{turn}.csv");
                emit(name.clone(), write_file(&args.out.join(&name), |w| Ok(write_top_guesses_csv(&top, w)?)))?;
            }
        }
        if wants(Report::Timeline) {
            let timeline = unique_forms_timeline(&sessions);
            let name = "timeline.csv".to_string();
            emit(name.clone(), write_file(&args.out.join(&name), |w| Ok(write_timeline_csv(&timeline, w)?)))?;
        }
        if wants(Report::Paths) {
            for &id in &puzzle_ids {
                let graph = guess_path_graph(&sessions, id).with_min_weight(args.min_weight);
                let name = format!("paths_{id}.dot");
                emit(name.clone(), write_file(&args.out.join(&name), |w| Ok(w.write_all(export_dot(&graph).as_bytes())?)))?;
            }
        }
        Ok(())
    })();
    if let Err(code) = result {
        return code;
    }

    println!(
        "{}",
        json!({ "sessions": summary.sessions, "skipped_lines": summary.skipped, "written": written })
    );
    eprintln!("{} session(s), {} skipped line(s), {} report file(s)", summary.sessions, summary.skipped, written.len());
    if warnings > 0 {
        EXIT_WARNINGS
    } else {
        EXIT_OK
    }
}

pub fn cmd_serve(args: &ServeArgs) -> i32 {
    let _ = tracing_subscriber::fmt()
        .with_writer(std::io::stderr)
        .with_env_filter(
            tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()),
        )
        .try_init();

    if !args.lists_dir.is_dir() {
        return fail(format!("lists directory {} does not exist", args.lists_dir.display()));
    }
    let lists = match load_lists(&args.lists_dir) {
        Ok(l) => l,
        Err(e) => return fail(e),
    };
    if lists.main.is_empty() {
        return fail(format!("{} has an empty main list", args.lists_dir.display()));
    }
    let log = match SessionLog::open(&args.log_path) {
        Ok(l) => l,
        Err(e) => return fail(format!("opening {}: {e}", args.log_path.display())),
    };
    let config = ServiceConfig {
        start_date: args.start_date,
        tz: args.tz,
        title: args.title.clone(),
    };
    let main_len = lists.main.len();
    let service = Arc::new(GameService::new(lists, config, Arc::new(SystemClock), log));

    let runtime = match tokio::runtime::Runtime::new() {
        Ok(rt) => rt,
        Err(e) => return fail(format!("starting runtime: {e}")),
    };
    runtime.block_on(async {
        let listener = match tokio::net::TcpListener::bind(args.bind).await {
            Ok(l) => l,
            Err(e) => return fail(format!("binding {}: {e}", args.bind)),
        };
        let addr = listener.local_addr().map_or_else(|_| args.bind.to_string(), |a| a.to_string());
        tracing::info!(%addr, main_len, log = %args.log_path.display(), "listening");
        println!("{}", json!({ "listening": addr }));
        let _ = std::io::stdout().flush();
        match serve(listener, service, shutdown_signal()).await {
            Ok(()) => {
                tracing::info!("shut down");
                EXIT_OK
            }
            Err(e) => fail(format!("server error: {e}")),
        }
    })
}
