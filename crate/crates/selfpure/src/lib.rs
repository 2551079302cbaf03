//! Command-line front end for `selfpure-core`: JSON input documents,
//! dual-format reports and a parallel executor for the theorem harness.

pub mod cli;
pub mod commands;
pub mod exec;
pub mod input;
pub mod report;
