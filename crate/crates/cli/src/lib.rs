//! Library surface of the CLI crate: the JSON spec-file format.

pub mod spec;
