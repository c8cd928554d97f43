//! Output files: CSV point lists, pretty JSON and the `error.json` written on depth failures.

use std::fs;
use std::path::Path;

use serde::Serialize;

use super::CliError;

pub const SCHEMA_VERSION: u32 = 1;

pub fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Other(e.to_string()))?;
    text.push('\n');
    write_text(path, &text)
}

/// One point per line in `{:.16e}`, which round-trips every `f64`. No header.
pub fn points_csv(points: &[f64]) -> String {
    points.iter().map(|p| format!("{p:.16e}\n")).collect()
}

pub fn read_points_csv(text: &str) -> Result<Vec<f64>, CliError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.parse::<f64>().map_err(|_| CliError::Other(format!("bad point line {l:?}"))))
        .collect()
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    schema: u32,
    command: &'a str,
    error: &'a str,
    message: String,
    required: Option<f64>,
    available: Option<f64>,
}

/// Machine-readable record of a depth or budget failure.
pub fn write_error(dir: &Path, command: &str, err: &CliError) -> Result<(), CliError> {
    let CliError::Depth { kind, required, available, .. } = err else {
        return Ok(());
    };
    ensure_dir(dir)?;
    let report = ErrorReport {
        schema: SCHEMA_VERSION,
        command,
        error: kind,
        message: err.to_string(),
        required: *required,
        available: *available,
    };
    write_json(&dir.join("error.json"), &report)
}
