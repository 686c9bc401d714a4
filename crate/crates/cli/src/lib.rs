//! Command-line front end: argument parsing, running a request, and the
//! text and JSON result formats.

pub mod args;
pub mod document;
pub mod run;

pub use args::{parse_args, render, Command, Format, Request};
pub use document::ResultDocument;
pub use run::{run, run_with_verbosity, Outcome, EXIT_ERROR, EXIT_OK, EXIT_TIMEOUT, EXIT_USAGE};
