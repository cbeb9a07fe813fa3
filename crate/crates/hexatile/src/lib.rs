//! Command-line front end, JSON documents and SVG rendering on top of
//! `hexatile-core`.

pub mod cli;
pub mod json;
pub mod svg;
pub mod verify;
