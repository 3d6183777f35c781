//! Command implementations behind the `rsdprng` binary.

pub mod bench;
pub mod commands;
pub mod stats;

pub use commands::{CliError, CliResult};
