//! Check reports: named three-valued records with an overall verdict.

use alloc::string::String;
use alloc::vec::Vec;

use crate::verdict::{Fuel, Status};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub name: String,
    pub status: Status,
    /// Witness or counterexample, human readable.
    pub detail: String,
    pub fuel: Fuel,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.push_fuel(name, status, detail, 0);
    }

    pub fn push_fuel(
        &mut self,
        name: impl Into<String>,
        status: Status,
        detail: impl Into<String>,
        fuel: Fuel,
    ) {
        self.records.push(Record {
            name: name.into(),
            status,
            detail: detail.into(),
            fuel,
        });
    }

    /// Appends `other`'s records with `prefix/` prepended to their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut r in other.records {
            r.name = alloc::format!("{prefix}/{}", r.name);
            self.records.push(r);
        }
    }

    /// Fail dominates, then unknown. An empty report passes.
    pub fn overall(&self) -> Status {
        self.records
            .iter()
            .fold(Status::Pass, |acc, r| acc.and(r.status))
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.records
            .iter()
            .find(|r| r.name == name)
            .map(|r| r.status)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }
}
