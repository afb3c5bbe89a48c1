use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::RsetError;
use crate::foldings::FoldCounter;
use crate::words::{Letter, Word};

/// Largest word space [`fold_census`] and [`r_set`] scan by default.
pub const DEFAULT_BUDGET: u128 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordSpace {
    /// Every word of length `2n` over `m` letters and their complements.
    All,
    /// Alternating words only: odd positions unbarred, even positions barred.
    Alternating,
}

/// Number of words of length `2n` in the space.
pub fn word_space_size(n: usize, m: u32, space: WordSpace) -> Option<u128> {
    let base = match space {
        WordSpace::All => 2 * m as u128,
        WordSpace::Alternating => m as u128,
    };
    base.checked_pow(u32::try_from(2 * n).ok()?)
}

fn base(m: u32, space: WordSpace) -> usize {
    match space {
        WordSpace::All => 2 * m as usize,
        WordSpace::Alternating => m as usize,
    }
}

fn letter(digit: usize, position: usize, space: WordSpace) -> Letter {
    match space {
        WordSpace::All => Letter::new(digit as u32 / 2 + 1, digit % 2 == 1),
        WordSpace::Alternating => Letter::new(digit as u32 + 1, position % 2 == 1),
    }
}

fn digits_of(mut index: u128, len: usize, base: usize) -> Vec<usize> {
    let mut digits = vec![0; len];
    for d in digits.iter_mut().rev() {
        *d = (index % base as u128) as usize;
        index /= base as u128;
    }
    digits
}

/// The word with the given index; the first letter is the most significant digit.
/// In the full space digit `2(i-1)` is `A_i` and `2(i-1)+1` its complement.
pub fn word_at(index: u128, n: usize, m: u32, space: WordSpace) -> Word {
    let digits = digits_of(index, 2 * n, base(m, space));
    let letters = digits
        .iter()
        .enumerate()
        .map(|(p, &d)| letter(d, p, space))
        .collect();
    Word::new(letters, m).expect("digits stay within the alphabet")
}

/// Tally of fold counts over a set of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub m: u32,
    pub space: WordSpace,
    /// fold count ↦ number of words with that many foldings
    pub counts: BTreeMap<u128, u64>,
}

impl Census {
    pub fn new(n: usize, m: u32, space: WordSpace) -> Census {
        Census {
            n,
            m,
            space,
            counts: BTreeMap::new(),
        }
    }

    pub fn words(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Fold counts attained by at least one word.
    pub fn r_set(&self) -> BTreeSet<u128> {
        self.counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect()
    }

    /// Total number of (word, folding) pairs.
    pub fn total_foldings(&self) -> u128 {
        self.counts.iter().map(|(&k, &c)| k * c as u128).sum()
    }

    /// Adds another tally of the same space.
    pub fn merge(&mut self, other: &Census) {
        assert_eq!(
            (self.n, self.m, self.space),
            (other.n, other.m, other.space),
            "merging censuses of different spaces"
        );
        for (&k, &c) in &other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
    }
}

/// Tallies words with indices in `range` (see [`word_at`]).
pub fn census_range(n: usize, m: u32, space: WordSpace, range: Range<u128>) -> Census {
    assert!(m >= 1, "alphabet size must be at least 1");
    let size = word_space_size(n, m, space).expect("word space fits in u128");
    assert!(range.end <= size, "range {range:?} exceeds the word space of size {size}");
    let mut census = Census::new(n, m, space);
    if range.is_empty() {
        return census;
    }
    let len = 2 * n;
    let base = base(m, space);
    let mut digits = digits_of(range.start, len, base);
    let mut letters: Vec<Letter> = digits
        .iter()
        .enumerate()
        .map(|(p, &d)| letter(d, p, space))
        .collect();
    let mut counter = FoldCounter::new();
    let mut local: BTreeMap<u128, u64> = BTreeMap::new();
    let mut remaining = range.end - range.start;
    loop {
        *local.entry(counter.count(&letters)).or_insert(0) += 1;
        remaining -= 1;
        if remaining == 0 {
            break;
        }
        // odometer step from the last position
        let mut p = len;
        loop {
            p -= 1;
            digits[p] += 1;
            if digits[p] < base {
                letters[p] = letter(digits[p], p, space);
                break;
            }
            digits[p] = 0;
            letters[p] = letter(0, p, space);
        }
    }
    census.counts = local;
    census
}

/// Fold-count tally over the whole word space, refusing spaces larger than
/// `budget` words.
pub fn fold_census(n: usize, m: u32, space: WordSpace, budget: u128) -> Result<Census, RsetError> {
    if m == 0 {
        return Err(RsetError::InvalidParameter("alphabet size must be at least 1"));
    }
    let size = word_space_size(n, m, space).ok_or(RsetError::Overflow)?;
    if size > budget {
        return Err(RsetError::BudgetExceeded { required: size, budget });
    }
    Ok(census_range(n, m, space, 0..size))
}

/// Fold counts attained by words of length `2n` over `m` letters, including 0.
pub fn r_set(n: usize, m: u32) -> Result<BTreeSet<u128>, RsetError> {
    fold_census(n, m, WordSpace::All, DEFAULT_BUDGET).map(|c| c.r_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foldings::count_foldings;
    use alloc::string::ToString;

    fn set(values: &[u128]) -> BTreeSet<u128> {
        values.iter().copied().collect()
    }

    #[test]
    fn small_censuses() {
        let c = fold_census(2, 1, WordSpace::All, 100).unwrap();
        assert_eq!(c.counts, BTreeMap::from([(0, 10), (1, 4), (2, 2)]));
        let c = fold_census(1, 1, WordSpace::All, 100).unwrap();
        assert_eq!(c.counts, BTreeMap::from([(0, 2), (1, 2)]));
        assert_eq!(r_set(0, 1).unwrap(), set(&[1]));
        assert_eq!(r_set(3, 1).unwrap(), set(&[0, 1, 2, 5]));
        assert_eq!(r_set(4, 1).unwrap(), set(&[0, 1, 2, 3, 4, 5, 14]));
    }

    #[test]
    fn budget_guard() {
        assert_eq!(
            fold_census(3, 1, WordSpace::All, 10),
            Err(RsetError::BudgetExceeded { required: 64, budget: 10 })
        );
    }

    #[test]
    fn ranges_merge_to_the_whole() {
        let whole = fold_census(3, 2, WordSpace::All, u128::MAX).unwrap();
        let size = word_space_size(3, 2, WordSpace::All).unwrap();
        let mut merged = Census::new(3, 2, WordSpace::All);
        let cuts = [0, 1, 777, 2048, 4000, size];
        for w in cuts.windows(2) {
            merged.merge(&census_range(3, 2, WordSpace::All, w[0]..w[1]));
        }
        assert_eq!(merged, whole);
        assert_eq!(whole.words() as u128, size);
    }

    #[test]
    fn word_indexing() {
        assert_eq!(word_at(0, 2, 2, WordSpace::All).to_string(), "AAAA");
        assert_eq!(word_at(1, 1, 2, WordSpace::All).to_string(), "Aa");
        assert_eq!(word_at(15, 1, 2, WordSpace::All).to_string(), "bb");
        assert_eq!(word_at(3, 2, 2, WordSpace::Alternating).to_string(), "AaBb");
        assert_eq!(word_at(5, 2, 2, WordSpace::Alternating).to_string(), "AbAb");
        let c = census_range(2, 2, WordSpace::All, 0..256);
        let direct: u128 = (0..256)
            .map(|i| u128::try_from(count_foldings(&word_at(i, 2, 2, WordSpace::All))).unwrap())
            .sum();
        assert_eq!(c.total_foldings(), direct);
    }

    #[test]
    fn alternating_total_is_colored_trees() {
        // m^n C_n foldings over alternating words
        let c = fold_census(3, 2, WordSpace::Alternating, u128::MAX).unwrap();
        assert_eq!(c.total_foldings(), 8 * 5);
    }
}
