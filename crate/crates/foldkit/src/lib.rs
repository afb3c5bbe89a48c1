//! Standard-library companion to `foldkit-core`: a parallel, checkpointed
//! fold-count census, output formats, and the `foldkit` command line.

pub mod census;
pub mod cli;
pub mod output;

pub use census::{budget_from_env, parallel_census, CensusError, CensusOptions};
pub use cli::run;
pub use output::Format;
