//! File formats and subcommands of the `qcorona` command-line tool.

pub mod commands;
pub mod files;
