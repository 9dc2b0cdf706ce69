//! Library half of the `meadow` command-line tool: descriptor parsing,
//! command implementations and report rendering.

pub mod commands;
pub mod descriptor;
pub mod report;
