//! Parsing and interchange formats shared by the `wellcover` binary and
//! its test suites.

pub mod formats;
pub mod graph6;
