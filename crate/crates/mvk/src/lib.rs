//! File formats, builtin catalog and command line for `mvk-core`.
//!
//! Formats: quandle tables (`.qtab`), diagrams (`.mvk`) and cocycles
//! (`.cocycle`). Each parser reports errors with line and column.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod acceptance;
pub mod bindings;
pub mod catalog;
pub mod cli;
pub mod cocycle_file;
pub mod diagram_file;
mod lex;
pub mod qtab;
pub mod report;

pub use lex::ParseError;
