//! Library surface of the CLI: output document types and their
//! serialization, shared by the binary and its integration tests.

pub mod output;
