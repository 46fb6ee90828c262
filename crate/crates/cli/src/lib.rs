//! Command line and HTTP entry points for the litigation cost engine.

pub mod cli;
pub mod service;
