//! Rendering and JSON plumbing for the `macdaha` binary.

pub mod json;
pub mod render;
