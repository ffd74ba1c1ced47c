//! Serialized check reports shared by every command.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use realizability_core::{Report, Status};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordDoc {
    pub name: String,
    pub verdict: String,
    pub detail: String,
    pub fuel: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub seed: u64,
    pub fuel: u64,
    pub depth: usize,
    pub bound: usize,
    pub overall: String,
    pub records: Vec<RecordDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub seed: u64,
    pub fuel: u64,
    pub depth: usize,
    pub bound: usize,
}

impl Document {
    pub fn new(command: Vec<String>, settings: &Settings, report: &Report) -> Document {
        Document {
            schema_version: SCHEMA_VERSION,
            command,
            seed: settings.seed,
            fuel: settings.fuel,
            depth: settings.depth,
            bound: settings.bound,
            overall: report.overall().as_str().to_string(),
            records: report
                .records
                .iter()
                .map(|r| RecordDoc {
                    name: r.name.clone(),
                    verdict: r.status.as_str().to_string(),
                    detail: r.detail.clone(),
                    fuel: r.fuel,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.records.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &self.records {
            let _ = write!(out, "{:<7} {:<width$}", r.verdict, r.name);
            if !r.detail.is_empty() {
                let _ = write!(out, "  {}", r.detail);
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "overall: {} (seed {}, fuel {}, depth {}, bound {})",
            self.overall, self.seed, self.fuel, self.depth, self.bound
        );
        out
    }
}

pub fn emit(text: &str, path: &Path) -> io::Result<()> {
    std::fs::write(path, text)
}

/// 0 for pass, 1 for fail, 2 for unknown.
pub fn exit_code(status: Status) -> u8 {
    match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Unknown => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings() -> Settings {
        Settings {
            seed: 7,
            fuel: 10,
            depth: 2,
            bound: 1,
        }
    }

    #[test]
    fn json_field_order_is_stable() {
        let mut r = Report::new();
        r.push("a", Status::Pass, "w");
        let doc = Document::new(vec!["x".into()], &settings(), &r);
        let json = doc.to_json();
        let keys = [
            "schema_version",
            "command",
            "seed",
            "fuel",
            "depth",
            "bound",
            "overall",
            "records",
        ];
        let pos: Vec<usize> = keys
            .iter()
            .map(|k| json.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{json}");
        let back: Document = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }
}
