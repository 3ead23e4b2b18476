//! Library side of the `ordz` command-line tool: run reports, tree exports, commands and
//! verification suites.

pub mod commands;
pub mod export;
pub mod report;
pub mod verify;
