//! Library half of the CLI: file formats, the built-in small-group
//! corpus, the almost simple catalog, report rendering and the corpus
//! runner. The binary in `main.rs` is a thin argument-parsing shell
//! over these modules.

pub mod catalog;
pub mod corpus;
pub mod format;
pub mod report;
pub mod smallgroups;
