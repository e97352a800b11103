//! Command line, parallel scans, results cache and file formats built on
//! `borel-core`.

pub mod cache;
pub mod cli;
pub mod error;
pub mod formats;
pub mod report;
pub mod runner;
pub mod table;

pub use error::{CliError, Result};
