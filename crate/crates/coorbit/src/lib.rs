//! JSON formats, verification reports and the command-line front end for
//! `coorbit-core`.

pub mod error;
pub mod format;
pub mod report;
pub mod verify;
pub mod commands;
pub mod cli;
