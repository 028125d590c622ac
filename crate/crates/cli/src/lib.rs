//! Batch command-line front end and HTTP service for `uztranslit`.

pub mod cli;
pub mod server;

pub use cli::{run_cli, EXIT_DATA, EXIT_OK, EXIT_USAGE};
