//! Library side of the `flagstab` command-line tool: input parsing,
//! command dispatch and output rendering.

pub mod commands;
pub mod error;
pub mod parse;
pub mod render;

pub use commands::{run, Command, Options, Outcome, VERSION_STAMP};
pub use error::CliError;
pub use render::{run_batch, run_text, Format, Report};
