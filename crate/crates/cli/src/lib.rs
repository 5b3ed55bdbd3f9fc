//! Library surface of the `f1zeta` command-line tool: scheme documents,
//! scalar parsing/formatting, and the CSV grid runner.

#![forbid(unsafe_code)]

pub mod doc;
pub mod grid;
pub mod scalar;
