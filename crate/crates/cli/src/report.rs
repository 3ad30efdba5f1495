//! Run summaries and CSV output. Every criterion row carries the measured
//! value, the bound it is compared against, and the boolean verdict; the
//! summary JSON is byte-stable across reruns except for `duration_seconds`.

use serde::Serialize;
use std::path::{Path, PathBuf};

/// Direction of a criterion comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Passes when `measured <= tolerance`.
    UpperBound,
    /// Passes when `measured >= tolerance`.
    LowerBound,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionRow {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub kind: BoundKind,
    pub passed: bool,
}

impl CriterionRow {
    pub fn upper(name: &str, measured: f64, tolerance: f64) -> Self {
        CriterionRow {
            name: name.to_string(),
            measured,
            tolerance,
            kind: BoundKind::UpperBound,
            passed: measured.is_finite() && measured <= tolerance,
        }
    }

    pub fn lower(name: &str, measured: f64, tolerance: f64) -> Self {
        CriterionRow {
            name: name.to_string(),
            measured,
            tolerance,
            kind: BoundKind::LowerBound,
            passed: measured.is_finite() && measured >= tolerance,
        }
    }

    pub fn print_line(&self, experiment: &str) {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let relation = match self.kind {
            BoundKind::UpperBound => "<=",
            BoundKind::LowerBound => ">=",
        };
        println!(
            "{verdict} {experiment}/{name}: measured {measured:.6e} (want {relation} {tolerance:.3e})",
            name = self.name,
            measured = self.measured,
            tolerance = self.tolerance,
        );
    }
}

/// Outcome of one experiment before it is written to disk.
pub struct ExperimentOutcome {
    pub experiment: &'static str,
    pub criteria: Vec<CriterionRow>,
    /// Full CSV content, header included, "\n" line endings.
    pub csv: String,
    /// Echo of the configuration block that produced this run.
    pub config_echo: serde_json::Value,
}

impl ExperimentOutcome {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }
}

#[derive(Serialize)]
struct RunSummary<'a> {
    experiment: &'a str,
    passed: bool,
    criteria: &'a [CriterionRow],
    config: &'a serde_json::Value,
    outputs: Vec<String>,
    duration_seconds: f64,
}

/// Writes `<out_dir>/<experiment>.csv` and `<out_dir>/<experiment>.summary.json`,
/// returning the summary paths for reporting.
pub fn write_outputs(
    outcome: &ExperimentOutcome,
    out_dir: &Path,
    duration_seconds: f64,
) -> std::io::Result<Vec<PathBuf>> {
    let csv_name = format!("{}.csv", outcome.experiment);
    let summary_name = format!("{}.summary.json", outcome.experiment);
    let csv_path = out_dir.join(&csv_name);
    let summary_path = out_dir.join(&summary_name);
    // Artifact paths are recorded relative to the out-dir so that two runs
    // with the same config are byte-identical wherever they land.
    let summary = RunSummary {
        experiment: outcome.experiment,
        passed: outcome.passed(),
        criteria: &outcome.criteria,
        config: &outcome.config_echo,
        outputs: vec![csv_name, summary_name],
        duration_seconds,
    };
    let mut json = serde_json::to_string_pretty(&summary).expect("summary serializes");
    json.push('\n');
    std::fs::write(&csv_path, &outcome.csv)?;
    std::fs::write(&summary_path, json)?;
    Ok(vec![csv_path, summary_path])
}

/// Scientific notation with 12 significant digits, the uniform numeric cell
/// format of every CSV this tool writes.
pub fn sci(v: f64) -> String {
    format!("{v:.11e}")
}

/// Builds a CSV from a header and rows of preformatted cells.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
