use std::io;

use serde::Serialize;

use super::stats::CorpusStats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LengthRow {
    pub n: usize,
    pub unique: u64,
    pub total: u64,
}

/// Unique and total token counts per length, ascending by length.
pub fn length_distribution_report(stats: &CorpusStats) -> Vec<LengthRow> {
    stats
        .per_length()
        .iter()
        .map(|(&n, c)| LengthRow {
            n,
            unique: c.unique,
            total: c.total,
        })
        .collect()
}

/// Writes rows as CSV with header `n,unique,total`.
pub fn write_length_csv<W: io::Write>(rows: &[LengthRow], out: W) -> csv::Result<()> {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    writer.write_record(["n", "unique", "total"])?;
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}
