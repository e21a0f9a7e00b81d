//! Std companion to `godel-core`: the command line, proof files, seeded
//! formula corpora and multi-threaded drivers.

pub mod cli;
pub mod corpus;
pub mod parallel;
pub mod proof_file;

pub use godel_core as core;
