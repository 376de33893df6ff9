use std::io::{BufRead, BufReader};
use std::path::Path;
use std::process::{Child, ChildStdout, Command, Stdio};

pub const BIN: &str = env!("CARGO_BIN_EXE_vardle");

/// A lists directory whose main list is the single word SAULE, so every
/// day's answer is known.
pub fn single_answer_lists(dir: &Path) {
    std::fs::create_dir_all(dir).unwrap();
    std::fs::write(dir.join("main.txt"), "SAULE\n").unwrap();
    std::fs::write(dir.join("secondary.txt"), "SIENA\nTIESA\n").unwrap();
}

/// A running `vardle serve` child and the address it reported.
pub struct ServeProcess {
    pub child: Child,
    pub addr: String,
    _stdout: BufReader<ChildStdout>,
}

impl ServeProcess {
    pub fn spawn(lists_dir: &Path, log_path: &Path) -> ServeProcess {
        let mut child = Command::new(BIN)
            .args(["serve", "--bind", "127.0.0.1:0", "--lists-dir"])
            .arg(lists_dir)
            .arg("--log-path")
            .arg(log_path)
            .env("RUST_LOG", "warn")
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .unwrap();
        let mut stdout = BufReader::new(child.stdout.take().unwrap());
        let mut line = String::new();
        stdout.read_line(&mut line).unwrap();
        let v: serde_json::Value = serde_json::from_str(&line).unwrap_or_else(|e| panic!("bad banner {line:?}: {e}"));
        ServeProcess {
            child,
            addr: v["listening"].as_str().unwrap().to_string(),
            _stdout: stdout,
        }
    }

    pub fn url(&self, path: &str) -> String {
        format!("http://{}{}", self.addr, path)
    }

    pub fn signal(&self, name: &str) {
        let ok = Command::new("kill").arg(format!("-{name}")).arg(self.child.id().to_string()).status().unwrap();
        assert!(ok.success());
    }
}

impl Drop for ServeProcess {
    fn drop(&mut self) {
        let _ = self.child.kill();
        let _ = self.child.wait();
    }
}

/// Plays one winning game (TIESA, SAULE) and finalizes it.
pub fn play_and_finalize(client: &reqwest::blocking::Client, base: &str, client_id: &str) {
    let token: serde_json::Value = client
        .post(format!("{base}/api/session"))
        .json(&serde_json::json!({ "client_id": client_id }))
        .send()
        .unwrap()
        .json()
        .unwrap();
    let token = token["token"].as_str().unwrap();
    for g in ["TIESA", "SAULE"] {
        let r = client
            .post(format!("{base}/api/session/{token}/guess"))
            .json(&serde_json::json!({ "guess": g }))
            .send()
            .unwrap();
        assert!(r.status().is_success());
    }
    let r = client.post(format!("{base}/api/session/{token}/finalize")).send().unwrap();
    assert!(r.status().is_success());
}
