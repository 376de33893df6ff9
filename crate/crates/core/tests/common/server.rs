use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::thread::JoinHandle;

use chrono::{NaiveDate, TimeZone, Utc};
use tokio::sync::oneshot;
use vardle::analytics::SessionLog;
use vardle::service::{serve, GameService, ManualClock, ServiceConfig, DEFAULT_TITLE};
use vardle::wordlists::WordLists;

use super::w;

/// Main list used by the in-process server: puzzle 0 is SAULE.
pub const MAIN: [&str; 3] = ["SAULE", "CĪŅAS", "TIESA"];
pub const SECONDARY: [&str; 5] = ["SIENA", "DIENA", "LAIKS", "TĪRĪT", "ŠUVES"];

pub fn small_lists() -> WordLists {
    WordLists {
        main: MAIN.iter().map(|s| w(s)).collect(),
        secondary: SECONDARY.iter().map(|s| w(s)).collect::<BTreeSet<_>>(),
        metadata: Default::default(),
    }
}

/// An API server on an ephemeral port, backed by a manual clock.
pub struct TestServer {
    pub base: String,
    pub clock: Arc<ManualClock>,
    pub log_path: PathBuf,
    stop: Option<oneshot::Sender<()>>,
    thread: Option<JoinHandle<()>>,
}

impl TestServer {
    /// Starts at 12:00 UTC on `day`, with the schedule starting 2022-01-28.
    pub fn start(dir: &Path, lists: WordLists, day: NaiveDate) -> TestServer {
        let noon = Utc.from_utc_datetime(&day.and_hms_opt(12, 0, 0).unwrap());
        let clock = Arc::new(ManualClock::new(noon));
        let config = ServiceConfig {
            start_date: NaiveDate::from_ymd_opt(2022, 1, 28).unwrap(),
            tz: chrono_tz::Europe::Riga,
            title: DEFAULT_TITLE.into(),
        };
        let log_path = dir.join("sessions.jsonl");
        let log = SessionLog::open(&log_path).unwrap();
        let svc = Arc::new(GameService::new(lists, config, clock.clone(), log));

        let (stop, stopped) = oneshot::channel::<()>();
        let (ready_tx, ready_rx) = std::sync::mpsc::channel();
        let thread = std::thread::spawn(move || {
            let rt = tokio::runtime::Builder::new_multi_thread().worker_threads(2).enable_all().build().unwrap();
            rt.block_on(async move {
                let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
                ready_tx.send(listener.local_addr().unwrap()).unwrap();
                serve(listener, svc, async {
                    let _ = stopped.await;
                })
                .await
                .unwrap();
            });
        });
        let addr = ready_rx.recv().unwrap();
        TestServer {
            base: format!("http://{addr}"),
            clock,
            log_path,
            stop: Some(stop),
            thread: Some(thread),
        }
    }

    pub fn url(&self, path: &str) -> String {
        format!("{}{}", self.base, path)
    }
}

impl Drop for TestServer {
    fn drop(&mut self) {
        if let Some(stop) = self.stop.take() {
            let _ = stop.send(());
        }
        if let Some(t) = self.thread.take() {
            let _ = t.join();
        }
    }
}
