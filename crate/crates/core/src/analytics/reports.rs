//! CSV writers for the analytics tables.

use std::io;

use chrono::NaiveDate;

use super::distribution::{Bucket, GuessDistribution};
use super::ranking::DifficultyRanking;
use crate::engine::Word;

fn writer<W: io::Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().has_headers(false).from_writer(out)
}

/// `bucket,count,fraction`, rows G1..G6 then X.
pub fn write_distribution_csv<W: io::Write>(dist: &GuessDistribution, out: W) -> csv::Result<()> {
    let mut w = writer(out);
    w.write_record(["bucket", "count", "fraction"])?;
    for bucket in Bucket::ALL {
        w.write_record([
            bucket.to_string(),
            dist.count(bucket).to_string(),
            format!("{:.6}", dist.fraction(bucket)),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_difficulty_csv<W: io::Write>(ranking: &DifficultyRanking, out: W) -> csv::Result<()> {
    let mut w = writer(out);
    let mut header = vec!["rank", "puzzle_id", "word", "sessions", "fail_count", "fail_fraction"];
    header.extend(["G1", "G2", "G3", "G4", "G5", "G6", "X"]);
    w.write_record(&header)?;
    for (i, row) in ranking.rows.iter().enumerate() {
        let mut record = vec![
            (i + 1).to_string(),
            row.puzzle_id.to_string(),
            row.word.to_string(),
            row.sessions.to_string(),
            row.fail_count.to_string(),
            format!("{:.6}", row.fail_fraction),
        ];
        record.extend(Bucket::ALL.iter().map(|&b| row.distribution.count(b).to_string()));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_top_guesses_csv<W: io::Write>(top: &[(Word, u64)], out: W) -> csv::Result<()> {
    let mut w = writer(out);
    w.write_record(["rank", "word", "count"])?;
    for (i, (word, count)) in top.iter().enumerate() {
        w.write_record([(i + 1).to_string(), word.to_string(), count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_timeline_csv<W: io::Write>(timeline: &[(NaiveDate, usize)], out: W) -> csv::Result<()> {
    let mut w = writer(out);
    w.write_record(["date", "cumulative_unique"])?;
    for (date, count) in timeline {
        w.write_record([date.to_string(), count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
