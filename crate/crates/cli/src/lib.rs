//! Config-driven runs of the authorship-norm models, writing CSV, JSON and
//! SVG outputs.

pub mod config;
mod error;
pub mod run;
pub mod svg;
pub mod table;

pub use config::{load_config, parse_config, Model, RunConfig};
pub use error::CliError;
pub use run::run_command;
pub use table::{emit_csv, ResultTable};
