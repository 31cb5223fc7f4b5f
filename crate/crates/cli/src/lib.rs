//! Command-line front end: instance files, batch validation, ledgers and
//! DOT export.

pub mod app;
pub mod commands;
pub mod error;
pub mod format;

pub use error::{CliError, ParseError};
pub use format::{parse_graph6, parse_instance, write_graph6, write_instance, Instance};
