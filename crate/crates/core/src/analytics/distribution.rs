use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::session::{Outcome, Session};

/// Row of a guess distribution: solved on turn 1..=6, or failed (`X`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bucket {
    Turn(u8),
    Failed,
}

impl Bucket {
    pub const ALL: [Bucket; 7] = [
        Bucket::Turn(1),
        Bucket::Turn(2),
        Bucket::Turn(3),
        Bucket::Turn(4),
        Bucket::Turn(5),
        Bucket::Turn(6),
        Bucket::Failed,
    ];

    fn index(self) -> usize {
        match self {
            Bucket::Turn(t) => usize::from(t) - 1,
            Bucket::Failed => 6,
        }
    }

    pub fn of(outcome: Outcome) -> Bucket {
        match outcome {
            Outcome::Won { turn } => Bucket::Turn(turn),
            Outcome::Lost => Bucket::Failed,
        }
    }
}

impl fmt::Display for Bucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bucket::Turn(t) => write!(f, "G{t}"),
            Bucket::Failed => f.write_str("X"),
        }
    }
}

impl Serialize for Bucket {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Sessions per outcome bucket G1..G6, X.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GuessDistribution {
    counts: [u64; 7],
}

impl GuessDistribution {
    pub fn record(&mut self, outcome: Outcome) {
        self.counts[Bucket::of(outcome).index()] += 1;
    }

    pub fn count(&self, bucket: Bucket) -> u64 {
        self.counts[bucket.index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn failed(&self) -> u64 {
        self.count(Bucket::Failed)
    }

    /// Share of sessions in `bucket`; 0 when there are no sessions.
    pub fn fraction(&self, bucket: Bucket) -> f64 {
        match self.total() {
            0 => 0.0,
            total => self.count(bucket) as f64 / total as f64,
        }
    }

    pub fn merge(&mut self, other: &GuessDistribution) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
    }

    pub fn counts(&self) -> BTreeMap<Bucket, u64> {
        Bucket::ALL.iter().map(|&b| (b, self.count(b))).collect()
    }

    pub fn fractions(&self) -> BTreeMap<Bucket, f64> {
        Bucket::ALL.iter().map(|&b| (b, self.fraction(b))).collect()
    }
}

impl Serialize for GuessDistribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            total: u64,
            counts: BTreeMap<Bucket, u64>,
            fractions: BTreeMap<Bucket, f64>,
        }
        Wire {
            total: self.total(),
            counts: self.counts(),
            fractions: self.fractions(),
        }
        .serialize(serializer)
    }
}

/// Outcome counts for the sessions of one puzzle.
pub fn guess_distribution<'a>(sessions: impl IntoIterator<Item = &'a Session>, puzzle_id: u32) -> GuessDistribution {
    let mut dist = GuessDistribution::default();
    for s in sessions.into_iter().filter(|s| s.puzzle_id == puzzle_id) {
        dist.record(s.outcome());
    }
    dist
}
