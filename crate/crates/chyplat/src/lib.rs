//! File formats and the command-line front end for `chyplat-core`.

pub mod certjson;
pub mod cli;
pub mod matrix_input;
