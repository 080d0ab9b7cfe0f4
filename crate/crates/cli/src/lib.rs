//! Parsing, printing and subcommands of the `autoform` executable.

pub mod commands;
pub mod error;
pub mod parse;
pub mod render;
pub mod session;

pub use commands::{run, Command, Options, Report};
pub use error::CliError;
