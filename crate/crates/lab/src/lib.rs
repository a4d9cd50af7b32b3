//! Command-line front end and text formats for the `wqo-core` algorithms.

pub mod cli;
pub mod config;
pub mod formats;

pub use cli::{run, Cli, Exit, LabError, Report};
