//! JSON front end, trace runner and verification battery for `poincare-core`.

pub mod commands;
pub mod error;
pub mod json;
pub mod sample;
pub mod trace;
pub mod verify;

pub use error::{CliError, CliResult};
