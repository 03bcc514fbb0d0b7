//! Command-line tool and file formats for alternating sign matrices with one
//! `-1`. The mathematics lives in [`asmc_core`]; this crate adds text and
//! JSON forms, parallel enumeration, the exhaustive verifier and the CLI.

pub mod cli;
pub mod format;
pub mod parallel;
pub mod pipeline;
pub mod verify;

pub use cli::run;
