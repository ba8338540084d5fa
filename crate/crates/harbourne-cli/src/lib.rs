//! Report assembly and serialization for the `harbourne` binary.
//!
//! Kept as a library so the document schema, quantity evaluator, and table
//! formatters are directly testable; `main.rs` only parses flags and maps
//! errors to exit codes.

pub mod document;
pub mod format;
pub mod report;
