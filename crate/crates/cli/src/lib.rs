//! Library side of the `hvs` command: record formats, catalog and reports.

pub mod catalog;
pub mod format;
pub mod input;
pub mod report;
pub mod skein;
