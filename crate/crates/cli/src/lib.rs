//! Command-line driver: graph expressions in, identified lattices and
//! machine-readable reports out.

pub mod commands;
pub mod dsl;
pub mod pipeline;
pub mod report;
pub mod tables;
