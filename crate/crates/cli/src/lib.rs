//! Support library for the `blockparity` binary: b-file parsing and
//! comparison, verification suites, and report formatting.

pub mod bfile;
pub mod report;
pub mod suites;
