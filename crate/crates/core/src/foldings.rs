//! Foldings as non-crossing perfect matchings of word positions.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{AddAssign, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumeration::catalan;
use crate::words::{self, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingError {
    OddLength { len: usize },
    OutOfRange { position: usize },
    NotInvolution { position: usize },
    FixedPoint { position: usize },
    Crossing { first: (usize, usize), second: (usize, usize) },
    NotComplementary { pair: (usize, usize) },
    LengthMismatch { word: usize, matching: usize },
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingError::OddLength { len } => write!(f, "matching on {len} points is not perfect"),
            MatchingError::OutOfRange { position } => {
                write!(f, "partner {} out of range", position + 1)
            }
            MatchingError::NotInvolution { position } => {
                write!(f, "position {} is matched inconsistently", position + 1)
            }
            MatchingError::FixedPoint { position } => {
                write!(f, "position {} is unmatched", position + 1)
            }
            MatchingError::Crossing { first, second } => write!(
                f,
                "pairs ({},{}) and ({},{}) cross",
                first.0 + 1,
                first.1 + 1,
                second.0 + 1,
                second.1 + 1
            ),
            MatchingError::NotComplementary { pair } => write!(
                f,
                "positions {} and {} do not hold complementary letters",
                pair.0 + 1,
                pair.1 + 1
            ),
            MatchingError::LengthMismatch { word, matching } => {
                write!(f, "word of length {word} cannot carry a matching on {matching} points")
            }
        }
    }
}

impl core::error::Error for MatchingError {}

/// A non-crossing perfect matching on `0..len`.
///
/// Ordering is lexicographic on the partner array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    pub fn from_partner(partner: Vec<usize>) -> Result<Matching, MatchingError> {
        let len = partner.len();
        if len % 2 == 1 {
            return Err(MatchingError::OddLength { len });
        }
        for (i, &j) in partner.iter().enumerate() {
            if j >= len {
                return Err(MatchingError::OutOfRange { position: j });
            }
            if j == i {
                return Err(MatchingError::FixedPoint { position: i });
            }
            if partner[j] != i {
                return Err(MatchingError::NotInvolution { position: i });
            }
        }
        let mut open: Vec<usize> = Vec::new();
        for (i, &j) in partner.iter().enumerate() {
            if j > i {
                open.push(i);
            } else {
                let top = open.pop().expect("involution closes only opened positions");
                if top != j {
                    return Err(MatchingError::Crossing {
                        first: (top, partner[top]),
                        second: (j, i),
                    });
                }
            }
        }
        Ok(Matching { partner })
    }

    /// Builds a matching on `0..len` from 0-based pairs.
    pub fn from_pairs(len: usize, pairs: &[(usize, usize)]) -> Result<Matching, MatchingError> {
        let mut partner = vec![usize::MAX; len];
        for &(a, b) in pairs {
            for p in [a, b] {
                if p >= len {
                    return Err(MatchingError::OutOfRange { position: p });
                }
                if partner[p] != usize::MAX {
                    return Err(MatchingError::NotInvolution { position: p });
                }
            }
            if a == b {
                return Err(MatchingError::FixedPoint { position: a });
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(position) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(MatchingError::FixedPoint { position });
        }
        Matching::from_partner(partner)
    }

    /// Same as [`Matching::from_pairs`] with 1-based positions.
    pub fn from_one_based_pairs(len: usize, pairs: &[(usize, usize)]) -> Result<Matching, MatchingError> {
        let mut shifted = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == 0 || b == 0 {
                return Err(MatchingError::OutOfRange { position: usize::MAX });
            }
            shifted.push((a - 1, b - 1));
        }
        Matching::from_pairs(len, &shifted)
    }

    pub(crate) fn from_partner_unchecked(partner: Vec<usize>) -> Matching {
        debug_assert!(Matching::from_partner(partner.clone()).is_ok());
        Matching { partner }
    }

    pub fn empty() -> Matching {
        Matching { partner: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Pairs `(i, j)` with `i < j`, ordered by `i`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i, j))
            .collect()
    }

    pub fn contains_pair(&self, a: usize, b: usize) -> bool {
        a < self.len() && self.partner[a] == b
    }

    pub fn check_folding_of(&self, w: &Word) -> Result<(), MatchingError> {
        if w.len() != self.len() {
            return Err(MatchingError::LengthMismatch {
                word: w.len(),
                matching: self.len(),
            });
        }
        let letters = w.letters();
        for (i, j) in self.pairs() {
            if !letters[i].is_complement_of(letters[j]) {
                return Err(MatchingError::NotComplementary { pair: (i, j) });
            }
        }
        Ok(())
    }

    pub fn is_folding_of(&self, w: &Word) -> bool {
        self.check_folding_of(w).is_ok()
    }

    /// Arc diagram as balanced parentheses, e.g. `()(())`.
    pub fn diagram(&self) -> String {
        self.partner
            .iter()
            .enumerate()
            .map(|(i, &j)| if i < j { '(' } else { ')' })
            .collect()
    }
}

impl fmt::Display for Matching {
    /// 1-based pair list, e.g. `[[1,2],[3,6],[4,5]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (i, j)) in self.pairs().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "[{},{}]", i + 1, j + 1)?;
        }
        f.write_str("]")
    }
}

/// Outcome of the greedy folding scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreedyFold {
    Folded(Matching),
    /// `open` holds the 0-based positions left unmatched by the scan, never empty.
    NotFoldable { open: Vec<usize> },
}

impl GreedyFold {
    pub fn matching(&self) -> Option<&Matching> {
        match self {
            GreedyFold::Folded(m) => Some(m),
            GreedyFold::NotFoldable { .. } => None,
        }
    }

    pub fn into_matching(self) -> Option<Matching> {
        match self {
            GreedyFold::Folded(m) => Some(m),
            GreedyFold::NotFoldable { .. } => None,
        }
    }
}

/// Greedy folding: scanning left to right, each letter bonds with the most recent
/// still-unmatched letter when that letter is its complement, and stays open
/// otherwise.
///
/// Bonding with the most recent open *complement* instead, skipping other open
/// letters, can cross arcs on foldable words such as `aaBAabAA`.
pub fn greedy_fold(w: &Word) -> GreedyFold {
    let letters = w.letters();
    let mut open: Vec<usize> = Vec::new();
    let mut partner = vec![usize::MAX; letters.len()];
    for (i, &l) in letters.iter().enumerate() {
        match open.last() {
            Some(&j) if letters[j].is_complement_of(l) => {
                open.pop();
                partner[i] = j;
                partner[j] = i;
            }
            _ => open.push(i),
        }
    }
    if open.is_empty() {
        GreedyFold::Folded(Matching::from_partner_unchecked(partner))
    } else {
        GreedyFold::NotFoldable { open }
    }
}

/// Interval table of fold counts: `get(i, j)` counts the foldings of `w[i..j]`.
struct FoldTable<T> {
    width: usize,
    cells: Vec<T>,
}

impl<T> FoldTable<T>
where
    T: Clone + Zero + One + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    fn build(letters: &[Letter]) -> FoldTable<T> {
        let len = letters.len();
        let width = len + 1;
        let mut cells = vec![T::zero(); width * width];
        for i in 0..=len {
            cells[i * width + i] = T::one();
        }
        for span in (2..=len).step_by(2) {
            for i in 0..=len - span {
                let j = i + span;
                let mut total = T::zero();
                // parity filter: the partner of i sits an odd distance away
                for k in (i + 1..j).step_by(2) {
                    if !letters[i].is_complement_of(letters[k]) {
                        continue;
                    }
                    let inner = &cells[(i + 1) * width + k];
                    let outer = &cells[(k + 1) * width + j];
                    if inner.is_zero() || outer.is_zero() {
                        continue;
                    }
                    total += &(inner * outer);
                }
                cells[i * width + j] = total;
            }
        }
        FoldTable { width, cells }
    }

    fn get(&self, i: usize, j: usize) -> &T {
        &self.cells[i * self.width + j]
    }
}

/// Words up to this half-length are counted in `u128`; the count never exceeds
/// the Catalan number `C_n`, which stays below `2^128` here.
const U128_HALF_LEN_LIMIT: usize = 64;

/// Number of foldings of `w`, by interval dynamic programming on the partner of
/// the leftmost position.
pub fn count_foldings(w: &Word) -> BigUint {
    count_letters(w.letters())
}

pub(crate) fn count_letters(letters: &[Letter]) -> BigUint {
    if letters.len() % 2 == 1 {
        return BigUint::zero();
    }
    if letters.len() / 2 <= U128_HALF_LEN_LIMIT {
        BigUint::from(count_letters_u128(letters))
    } else {
        FoldTable::<BigUint>::build(letters).get(0, letters.len()).clone()
    }
}

/// Fixed-width count for words of half-length at most 64.
pub fn count_letters_u128(letters: &[Letter]) -> u128 {
    assert!(letters.len() / 2 <= U128_HALF_LEN_LIMIT);
    if letters.len() % 2 == 1 {
        return 0;
    }
    *FoldTable::<u128>::build(letters).get(0, letters.len())
}

/// Reusable fold counter for exhaustive scans; keeps its table allocation.
#[derive(Debug, Default)]
pub struct FoldCounter {
    cells: Vec<u128>,
}

impl FoldCounter {
    pub fn new() -> FoldCounter {
        FoldCounter::default()
    }

    /// Same value as [`count_letters_u128`].
    pub fn count(&mut self, letters: &[Letter]) -> u128 {
        let len = letters.len();
        if len % 2 == 1 {
            return 0;
        }
        assert!(len / 2 <= U128_HALF_LEN_LIMIT);
        let width = len + 1;
        self.cells.clear();
        self.cells.resize(width * width, 0);
        let cells = &mut self.cells;
        for i in 0..=len {
            cells[i * width + i] = 1;
        }
        for span in (2..=len).step_by(2) {
            for i in 0..=len - span {
                let j = i + span;
                let mut total = 0u128;
                for k in (i + 1..j).step_by(2) {
                    if letters[i].is_complement_of(letters[k]) {
                        total += cells[(i + 1) * width + k] * cells[(k + 1) * width + j];
                    }
                }
                cells[i * width + j] = total;
            }
        }
        cells[len]
    }
}

/// All foldings of `w` in lexicographic order of partner arrays.
pub fn enumerate_foldings(w: &Word) -> Vec<Matching> {
    let letters = w.letters();
    if letters.len() % 2 == 1 {
        return Vec::new();
    }
    let table = FoldTable::<u128>::build(letters);
    let mut memo = BTreeMap::new();
    enumerate_interval(letters, &table, 0, letters.len(), &mut memo)
        .into_iter()
        .map(Matching::from_partner_unchecked)
        .collect()
}

/// Partner blocks for `letters[i..j]`, each holding absolute partner indices.
/// Choosing the partner of `i` in increasing order, then the inner block, then the
/// outer block, yields lexicographic order.
fn enumerate_interval(
    letters: &[Letter],
    table: &FoldTable<u128>,
    i: usize,
    j: usize,
    memo: &mut BTreeMap<(usize, usize), Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if i == j {
        return vec![Vec::new()];
    }
    if let Some(done) = memo.get(&(i, j)) {
        return done.clone();
    }
    let mut out = Vec::new();
    for k in (i + 1..j).step_by(2) {
        if !letters[i].is_complement_of(letters[k])
            || *table.get(i + 1, k) == 0
            || *table.get(k + 1, j) == 0
        {
            continue;
        }
        let inner = enumerate_interval(letters, table, i + 1, k, memo);
        let outer = enumerate_interval(letters, table, k + 1, j, memo);
        for a in &inner {
            for b in &outer {
                let mut block = Vec::with_capacity(j - i);
                block.push(k);
                block.extend_from_slice(a);
                block.push(i);
                block.extend_from_slice(b);
                out.push(block);
            }
        }
    }
    memo.insert((i, j), out.clone());
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AMatchingError {
    Word(WordError),
    /// A non-crossing `A`-matching left an odd number of `B` letters in one region.
    OddGrouping { size: usize },
}

impl fmt::Display for AMatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AMatchingError::Word(e) => e.fmt(f),
            AMatchingError::OddGrouping { size } => {
                write!(f, "A-matching produced a B-grouping of odd length {size}")
            }
        }
    }
}

impl core::error::Error for AMatchingError {}

impl From<WordError> for AMatchingError {
    fn from(e: WordError) -> Self {
        AMatchingError::Word(e)
    }
}

/// Counts the foldings of an alternating two-letter word by first matching the
/// index-1 letters among themselves; each such `A`-matching splits the `B` letters
/// into groupings of sizes `2s_1, …, 2s_j` and extends in `C_{s_1}⋯C_{s_j}` ways.
pub fn count_via_a_matchings(w: &Word) -> Result<BigUint, AMatchingError> {
    if w.alphabet_size() != 2 {
        return Err(WordError::AlphabetSize {
            expected: 2,
            found: w.alphabet_size(),
        }
        .into());
    }
    if !words::is_alternating(w) {
        let position = w
            .letters()
            .iter()
            .enumerate()
            .position(|(i, l)| l.is_barred() != (i % 2 == 1))
            .unwrap_or(0);
        return Err(WordError::NotAlternating { position }.into());
    }
    let letters = w.letters();
    let a_positions: Vec<usize> = (0..letters.len()).filter(|&i| letters[i].index() == 1).collect();
    let a_letters: Vec<Letter> = a_positions.iter().map(|&p| letters[p]).collect();

    let mut total = BigUint::zero();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut failure = None;
    for_each_matching(&a_letters, 0, &mut Vec::new(), &mut pairs, &mut |local| {
        if failure.is_some() {
            return;
        }
        let arcs: Vec<(usize, usize)> = local
            .iter()
            .map(|&(x, y)| (a_positions[x], a_positions[y]))
            .collect();
        match extension_count(letters.len(), &arcs) {
            Ok(c) => total += c,
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

type PairVisitor<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

/// Visits every non-crossing perfect complementary matching of `letters`,
/// scanning left to right with an explicit stack of open arcs.
fn for_each_matching(
    letters: &[Letter],
    pos: usize,
    open: &mut Vec<usize>,
    pairs: &mut Vec<(usize, usize)>,
    visit: &mut PairVisitor,
) {
    if pos == letters.len() {
        if open.is_empty() {
            visit(pairs);
        }
        return;
    }
    let remaining = letters.len() - pos;
    if open.len() > remaining {
        return;
    }
    // close the innermost open arc
    if let Some(&top) = open.last() {
        if letters[top].is_complement_of(letters[pos]) {
            open.pop();
            pairs.push((top, pos));
            for_each_matching(letters, pos + 1, open, pairs, visit);
            pairs.pop();
            open.push(top);
        }
    }
    open.push(pos);
    for_each_matching(letters, pos + 1, open, pairs, visit);
    open.pop();
}

/// `∏ C_{s_i}` over the regions cut out by `arcs` among the remaining positions.
fn extension_count(len: usize, arcs: &[(usize, usize)]) -> Result<BigUint, AMatchingError> {
    let mut arc_at = vec![None; len];
    for (id, &(a, b)) in arcs.iter().enumerate() {
        arc_at[a] = Some((id, true));
        arc_at[b] = Some((id, false));
    }
    // region 0 is the outside; region id+1 lies directly under arc id
    let mut sizes = vec![0usize; arcs.len() + 1];
    let mut stack: Vec<usize> = Vec::new();
    for slot in arc_at.iter() {
        match slot {
            Some((id, true)) => stack.push(id + 1),
            Some((_, false)) => {
                stack.pop();
            }
            None => sizes[stack.last().copied().unwrap_or(0)] += 1,
        }
    }
    let mut product = BigUint::one();
    for size in sizes {
        if size % 2 == 1 {
            return Err(AMatchingError::OddGrouping { size });
        }
        product *= catalan(size / 2);
    }
    Ok(product)
}
