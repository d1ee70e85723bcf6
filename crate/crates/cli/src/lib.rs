//! Command-line front end for `hadamard-core`.
//!
//! Subcommands: `gates-show`, `check-unitarity`, `verify`, `derive`,
//! `trajectory` and `intersect`. Gates, templates and families are written in
//! the `name:param,param,...` mini-language of the core crate.

#![deny(missing_docs)]

pub mod command;
pub mod emit;
pub mod run;

pub use command::{Circle, CommandSpec, Format};
pub use run::{run, CliError};
