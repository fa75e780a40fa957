//! Library surface of the `delannoy` command-line tool, split out so the
//! argument parser, report serialization, and execution logic are testable
//! without spawning the binary.

pub mod args;
pub mod exec;
pub mod report;
