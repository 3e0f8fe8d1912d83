use std::path::Path;

use serde::Serialize;

use super::trials::Report;
use crate::error::{Error, Result};
use crate::instances::{parse_json, write_file};

pub const CSV_COLUMNS: [&str; 9] =
    ["algorithm", "trials", "mean_alg", "ci_lo", "ci_hi", "mean_opt", "ratio", "grsetu", "verify_pass_rate"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Chosen by file extension; anything but `.csv` is JSON.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => Format::Csv,
            _ => Format::Json,
        }
    }
}

#[derive(Serialize)]
struct Row<'a> {
    algorithm: &'a str,
    trials: usize,
    mean_alg: Option<f64>,
    ci_lo: Option<f64>,
    ci_hi: Option<f64>,
    mean_opt: Option<f64>,
    ratio: Option<f64>,
    grsetu: Option<u32>,
    verify_pass_rate: Option<f64>,
}

/// One row per report with at least one trial, in the given order.
pub fn to_csv(reports: &[Report]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(CSV_COLUMNS)?;
    for r in reports.iter().filter(|r| r.trials > 0) {
        w.serialize(Row {
            algorithm: &r.algorithm,
            trials: r.trials,
            mean_alg: r.mean_alg,
            ci_lo: r.ci_lo,
            ci_hi: r.ci_hi,
            mean_opt: r.mean_opt,
            ratio: r.ratio,
            grsetu: r.grsetu,
            verify_pass_rate: r.verify_pass_rate,
        })?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn to_json(reports: &[Report]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports always serialize");
    s.push('\n');
    s
}

pub fn parse_reports(text: &str) -> Result<Vec<Report>> {
    parse_json(text)
}

pub fn emit(reports: &[Report], format: Format, path: &Path) -> Result<()> {
    let text = match format {
        Format::Csv => to_csv(reports)?,
        Format::Json => to_json(reports),
    };
    write_file(path, &text)
}
