//! Standard-library side of the toolkit: parallel class search, the class
//! file store, golden tables, verification suites and JSON shapes for the
//! `gprc` command.

pub mod bfs;
pub mod class;
pub mod golden;
pub mod json;
pub mod store;
pub mod verify;
