//! Closed-form counts.
//!
//! - [`catalan`], [`binomial`], [`multinomial`]: exact building blocks.
//! - [`proper_coloring_count`], [`rpt`], [`degree_sequences`], [`count_one_foldable`]:
//!   words with exactly one folding, counted through properly edge-colored plane
//!   trees grouped by degree multiset.
//! - [`closed_walks`], [`count_foldable`], [`asymptotic_estimate`]: foldable words
//!   counted as closed walks on the infinite regular tree.
//! - [`one_fold_growth_rate`]: the exponential growth base of the dominant term
//!   for two-letter alphabets.

mod counting;
mod growth;
mod walks;

use core::fmt;

pub use counting::{
    binomial, catalan, count_one_foldable, degree_sequences, multinomial, proper_coloring_count, rpt,
    DegreeSequences,
};
pub use growth::{growth_objective, ln_growth_objective, one_fold_growth_rate, GrowthPoint};
pub use walks::{
    asymptotic_estimate, closed_walks, closed_walks_series, count_foldable, ln_asymptotic_estimate,
    ln_biguint,
};

#[derive(Debug, Clone, PartialEq)]
pub enum EnumerationError {
    AlphabetTooSmall { m: u32, min: u32 },
    InvalidTolerance(f64),
    NonConvergence { iterations: usize },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::AlphabetTooSmall { m, min } => {
                write!(f, "alphabet size {m} is below the minimum {min}")
            }
            EnumerationError::InvalidTolerance(t) => write!(f, "tolerance must be positive, got {t}"),
            EnumerationError::NonConvergence { iterations } => {
                write!(f, "optimizer did not converge within {iterations} sweeps")
            }
        }
    }
}

impl core::error::Error for EnumerationError {}
