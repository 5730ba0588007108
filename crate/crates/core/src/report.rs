//! CSV and JSON emission of simulation reports.

use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::sim::SimulationReport;

pub const CSV_HEADER: [&str; 8] = [
    "ebno_db",
    "bits",
    "bit_errors",
    "ber",
    "blocks",
    "block_errors",
    "bler",
    "avg_iters",
];

pub fn to_csv(report: &SimulationReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for p in &report.points {
        w.write_record([
            p.ebno_db.to_string(),
            p.bits.to_string(),
            p.bit_errors.to_string(),
            format!("{:e}", p.ber),
            p.blocks.to_string(),
            p.block_errors.to_string(),
            format!("{:e}", p.bler),
            p.avg_iters.to_string(),
        ])?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

pub fn to_json(report: &SimulationReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}

/// Writes `path` as CSV and a JSON summary next to it (same stem, `.json`).
/// Returns the JSON path.
pub fn emit(report: &SimulationReport, path: impl AsRef<Path>) -> Result<PathBuf> {
    let path = path.as_ref();
    std::fs::write(path, to_csv(report)?)?;
    let json_path = path.with_extension("json");
    std::fs::write(&json_path, to_json(report)?)?;
    Ok(json_path)
}
