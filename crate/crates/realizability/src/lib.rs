//! File formats, seeded sampling, reports and the `realize` command-line
//! front end over `realizability-core`.

pub mod cli;
pub mod format;
pub mod report;
pub mod sample;

pub use format::{DcoFile, FormatError};
pub use report::{Document, Settings};
