//! Report document assembly and emission.

use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use hopfkit::hopfcore::{Check, Report, Status};

pub const SCHEMA_VERSION: u32 = 1;

/// The versioned report document. Checks are ordered by check id, so the
/// serialization is byte-identical across runs unless timings are on.
#[derive(Serialize)]
pub struct Document {
    pub schema_version: u32,
    pub command: String,
    pub parameters: Value,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl Document {
    pub fn new(command: &str, parameters: Value, report: Report) -> Self {
        let report = report.finalize();
        let status = if report.all_passed() { Status::Pass } else { Status::Fail };
        Document {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            parameters,
            status,
            checks: report.checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Prefixes every check id with a stage tag and merges into `into`.
pub fn merge_stage(into: &mut Report, stage: &str, stage_report: Report, elapsed_ms: Option<u64>) {
    for mut check in stage_report.checks {
        check.check_id = format!("{stage}/{}", check.check_id);
        into.push(check);
    }
    if let Some(ms) = elapsed_ms {
        let mut summary = Check::pass(format!("{stage}/zz-elapsed"));
        summary.elapsed_ms = Some(ms);
        into.push(summary);
    }
}

/// Writes the document to the chosen sink: an explicit path, the
/// directory named by HOPFKIT_OUT_DIR, or stdout.
pub fn emit(doc: &Document, out: Option<&Path>) -> Result<(), String> {
    let json = serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?;
    let target = match out {
        Some(path) => Some(path.to_path_buf()),
        None => std::env::var_os("HOPFKIT_OUT_DIR")
            .map(|dir| Path::new(&dir).join(format!("{}.json", doc.command))),
    };
    match target {
        Some(path) => {
            std::fs::write(&path, json.as_bytes()).map_err(|e| format!("writing {}: {e}", path.display()))?;
            eprintln!("report written to {}", path.display());
        }
        None => println!("{json}"),
    }
    Ok(())
}
