//! Command-line front end: expression parsing, session configuration,
//! pipeline stages, and report serialization.

pub mod config;
pub mod parse;
pub mod pipeline;
pub mod report;
