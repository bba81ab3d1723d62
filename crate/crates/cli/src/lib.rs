//! File formats and command implementations behind the `diagrect` binary.

pub mod commands;
pub mod export;
pub mod svg;
pub mod text;

pub use commands::CliError;
