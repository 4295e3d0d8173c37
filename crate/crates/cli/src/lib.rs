//! Command-line front end for `entangle-core`: state files, reports and the
//! reproduction suite behind `entangle verify-paper`.

pub mod claims;
pub mod commands;
pub mod report;
pub mod statefile;
