//! Command-line front end: curve documents in, invariant and bound reports out.

pub mod args;
pub mod corpus;
pub mod error;
pub mod input;
pub mod report;
pub mod run;

pub use args::Cli;
pub use error::CliError;
pub use run::{run, Outcome};
