//! Which fold counts occur among words of a given length.
//!
//! [`fold_census`] tallies fold counts over every word of length `2n`;
//! [`r_set`] keeps the counts that occur. The Catalan superset
//! ([`y_set`], [`z_set`], [`r_superset`]) bounds the single-letter case from above,
//! and [`top_gap_report`] checks the largest values it allows. [`Family`] builds
//! words with known fold counts, and [`find_a_decomposition`] certifies words with
//! exactly two foldings.
//!
//! Counts here are `u128`: a census is only feasible far below the first fold
//! count that would overflow it.

mod census;
mod decomposition;
mod families;
mod superset;

use alloc::vec::Vec;
use core::fmt;

pub use census::{census_range, fold_census, r_set, word_at, word_space_size, Census, WordSpace, DEFAULT_BUDGET};
pub use decomposition::{find_a_decomposition, ADecomposition};
pub use families::Family;
pub use superset::{r_superset, top_gap_report, y_set, z_set, TopGapReport, Z_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RsetError {
    BudgetExceeded { required: u128, budget: u128 },
    /// The quantity does not fit the fixed-width arithmetic.
    Overflow,
    InvalidParameter(&'static str),
    /// Superset values above the gap threshold that are not among the five top values.
    TopGapViolation { values: Vec<u128> },
}

impl fmt::Display for RsetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RsetError::BudgetExceeded { required, budget } => {
                write!(f, "work size {required} exceeds the budget {budget}")
            }
            RsetError::Overflow => f.write_str("value exceeds 128-bit arithmetic"),
            RsetError::InvalidParameter(msg) => f.write_str(msg),
            RsetError::TopGapViolation { values } => {
                write!(f, "{} superset values lie in the forbidden top range:", values.len())?;
                for v in values {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for RsetError {}

pub(crate) fn catalan_u128(i: usize) -> Result<u128, RsetError> {
    u128::try_from(crate::enumeration::catalan(i)).map_err(|_| RsetError::Overflow)
}
