//! Configuration loading and subcommand implementations for the `graphprod`
//! binary.

pub mod commands;
pub mod config;

pub use config::{emit_config, parse_config, ConfigErrors, RunConfig};
