//! File formats, configuration, the command-line surface and the verification suite for
//! generalized Schur algebras computed by `schur-core`.

pub mod cache;
pub mod cli;
pub mod config;
pub mod error;
pub mod io;
pub mod presentation;
pub mod suite;

pub use error::CliError;
