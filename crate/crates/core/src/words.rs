//! Letters, words, the word grammar, and the doubled-alphabet transform.
//!
//! Two textual forms are accepted. The compact form spells letter `A_i` as the
//! `i`-th uppercase Latin letter and its complement as the lowercase one, so
//! `AaABba` is `A1 a1 A1 A2 a2 a1`. The token form separates `A<k>` / `a<k>`
//! tokens by whitespace or commas and works for any alphabet size.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A letter `A_i` or its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    index: u32,
    barred: bool,
}

impl Letter {
    /// Panics if `index` is zero; letter indices start at 1.
    pub const fn new(index: u32, barred: bool) -> Letter {
        assert!(index >= 1, "letter index must be at least 1");
        Letter { index, barred }
    }

    pub const fn unbarred(index: u32) -> Letter {
        Letter::new(index, false)
    }

    pub const fn barred(index: u32) -> Letter {
        Letter::new(index, true)
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    pub fn complement(self) -> Letter {
        Letter {
            index: self.index,
            barred: !self.barred,
        }
    }

    pub fn is_complement_of(self, other: Letter) -> bool {
        self.index == other.index && self.barred != other.barred
    }

    fn compact_char(self) -> Option<char> {
        if self.index > 26 {
            return None;
        }
        let base = if self.barred { b'a' } else { b'A' };
        Some((base + (self.index - 1) as u8) as char)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.compact_char() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "{}{}", if self.barred { 'a' } else { 'A' }, self.index),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    ZeroAlphabet,
    LetterOutOfRange { index: u32, m: u32 },
    OddLength { len: usize },
    NotAlternating { position: usize },
    AlphabetSize { expected: u32, found: u32 },
    /// The word does not start with the letter playing the role of `A`.
    LeadingLetter { expected: u32, found: u32 },
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::ZeroAlphabet => write!(f, "alphabet size must be at least 1"),
            WordError::LetterOutOfRange { index, m } => {
                write!(f, "letter index {index} exceeds alphabet size {m}")
            }
            WordError::OddLength { len } => write!(f, "word has odd length {len}"),
            WordError::NotAlternating { position } => {
                write!(f, "word is not alternating at position {}", position + 1)
            }
            WordError::AlphabetSize { expected, found } => {
                write!(f, "expected alphabet size {expected}, found {found}")
            }
            WordError::LeadingLetter { expected, found } => write!(
                f,
                "word must begin with a letter of index {expected}, found index {found}"
            ),
        }
    }
}

impl core::error::Error for WordError {}

/// A finite word over `m` letters and their complements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    m: u32,
}

impl Word {
    pub fn new(letters: Vec<Letter>, m: u32) -> Result<Word, WordError> {
        if m == 0 {
            return Err(WordError::ZeroAlphabet);
        }
        if let Some(l) = letters.iter().find(|l| l.index > m) {
            return Err(WordError::LetterOutOfRange { index: l.index, m });
        }
        Ok(Word { letters, m })
    }

    /// Builds a word whose alphabet size is the largest index present (at least 1).
    pub fn from_letters(letters: Vec<Letter>) -> Word {
        let m = letters.iter().map(|l| l.index).max().unwrap_or(1);
        Word { letters, m }
    }

    pub fn empty(m: u32) -> Word {
        assert!(m >= 1);
        Word {
            letters: Vec::new(),
            m,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `n` for a word of length `2n`.
    pub fn half_len(&self) -> Option<usize> {
        self.len().is_multiple_of(2).then_some(self.len() / 2)
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        self.letters.get(i).copied()
    }

    /// Same word over a larger alphabet.
    pub fn with_alphabet(&self, m: u32) -> Result<Word, WordError> {
        Word::new(self.letters.clone(), m)
    }

    /// Subword on `range`, keeping the alphabet size.
    pub fn slice(&self, range: core::ops::Range<usize>) -> Word {
        Word {
            letters: self.letters[range].to_vec(),
            m: self.m,
        }
    }

    /// Concatenation of `parts`, all over alphabet size `m`.
    pub fn concat(m: u32, parts: &[&[Letter]]) -> Word {
        let letters = parts.iter().flat_map(|p| p.iter().copied()).collect();
        Word { letters, m }
    }

    pub fn is_foldable(&self) -> bool {
        is_foldable(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m <= 26 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
        } else {
            for (i, l) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}{}", if l.barred { 'a' } else { 'A' }, l.index)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    MalformedToken(String),
    InvalidCharacter { ch: char, position: usize },
    Word(WordError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MalformedToken(t) => write!(f, "malformed token `{t}`"),
            ParseError::InvalidCharacter { ch, position } => {
                write!(f, "invalid character `{ch}` at offset {position}")
            }
            ParseError::Word(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for ParseError {}

impl From<WordError> for ParseError {
    fn from(e: WordError) -> Self {
        ParseError::Word(e)
    }
}

/// Parses a word in compact or token form (token form when the text contains a
/// digit or a comma). The empty string is the empty word.
pub fn parse_word(text: &str, m_override: Option<u32>) -> Result<Word, ParseError> {
    let token_form = text.chars().any(|c| c.is_ascii_digit() || c == ',');
    let letters = if token_form {
        parse_tokens(text)?
    } else {
        parse_compact(text)?
    };
    Ok(match m_override {
        Some(m) => Word::new(letters, m)?,
        None => Word::from_letters(letters),
    })
}

fn parse_compact(text: &str) -> Result<Vec<Letter>, ParseError> {
    text.char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(position, ch)| match ch {
            'A'..='Z' => Ok(Letter::unbarred(ch as u32 - 'A' as u32 + 1)),
            'a'..='z' => Ok(Letter::barred(ch as u32 - 'a' as u32 + 1)),
            _ => Err(ParseError::InvalidCharacter { ch, position }),
        })
        .collect()
}

fn parse_tokens(text: &str) -> Result<Vec<Letter>, ParseError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|token| {
            let malformed = || ParseError::MalformedToken(token.into());
            let mut chars = token.chars();
            let barred = match chars.next() {
                Some('A') => false,
                Some('a') => true,
                _ => return Err(malformed()),
            };
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            match digits.parse::<u32>() {
                Ok(index) if index >= 1 => Ok(Letter::new(index, barred)),
                _ => Err(malformed()),
            }
        })
        .collect()
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s, None)
    }
}

/// Stack reduction: repeatedly cancel adjacent complementary letters.
pub fn is_foldable(w: &Word) -> bool {
    reduces_to_empty(w.letters())
}

pub(crate) fn reduces_to_empty(letters: &[Letter]) -> bool {
    if letters.len() % 2 == 1 {
        return false;
    }
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match stack.last() {
            Some(&top) if top.is_complement_of(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    stack.is_empty()
}

/// Maps a word over `m` letters to an alternating word over `2m` letters with
/// the same foldings: an unbarred `A_i` at an even (1-based) position becomes
/// `Ā_{m+i}` and a barred `Ā_i` at an odd position becomes `A_{m+i}`.
pub fn doubled(w: &Word) -> Result<Word, WordError> {
    if w.len() % 2 == 1 {
        return Err(WordError::OddLength { len: w.len() });
    }
    let m = w.m;
    let letters = w
        .letters
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let odd_position = i % 2 == 0;
            match (odd_position, l.barred) {
                (false, false) => Letter::barred(m + l.index),
                (true, true) => Letter::unbarred(m + l.index),
                _ => l,
            }
        })
        .collect();
    Ok(Word { letters, m: 2 * m })
}

/// Inverse of [`doubled`] for an alternating word over an even alphabet.
pub fn undoubled(w: &Word) -> Result<Word, WordError> {
    if w.m % 2 == 1 {
        return Err(WordError::AlphabetSize {
            expected: w.m + 1,
            found: w.m,
        });
    }
    if let Some(position) = first_non_alternating(w) {
        return Err(WordError::NotAlternating { position });
    }
    let half = w.m / 2;
    let letters = w
        .letters
        .iter()
        .map(|&l| {
            if l.index > half {
                Letter::new(l.index - half, !l.barred)
            } else {
                l
            }
        })
        .collect();
    Ok(Word { letters, m: half })
}

/// Odd (1-based) positions unbarred, even positions barred.
pub fn is_alternating(w: &Word) -> bool {
    first_non_alternating(w).is_none()
}

fn first_non_alternating(w: &Word) -> Option<usize> {
    w.letters
        .iter()
        .enumerate()
        .position(|(i, l)| l.barred != (i % 2 == 1))
}

/// Lengths of the maximal runs of `B` letters in an alternating word over two
/// letters. Index 1 is `A` and index 2 is `B`; `swap_roles` exchanges them. The
/// word must begin with the `A` letter.
pub fn maximal_b_subword_lengths(w: &Word, swap_roles: bool) -> Result<Vec<usize>, WordError> {
    if w.m != 2 {
        return Err(WordError::AlphabetSize {
            expected: 2,
            found: w.m,
        });
    }
    if let Some(position) = first_non_alternating(w) {
        return Err(WordError::NotAlternating { position });
    }
    let (a_index, b_index) = if swap_roles { (2, 1) } else { (1, 2) };
    if let Some(first) = w.letters.first() {
        if first.index != a_index {
            return Err(WordError::LeadingLetter {
                expected: a_index,
                found: first.index,
            });
        }
    }
    let mut runs = Vec::new();
    let mut current = 0;
    for l in &w.letters {
        if l.index == b_index {
            current += 1;
        } else if current > 0 {
            runs.push(current);
            current = 0;
        }
    }
    if current > 0 {
        runs.push(current);
    }
    Ok(runs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(s: &str) -> Word {
        parse_word(s, None).unwrap()
    }

    #[test]
    fn parses_compact_form() {
        let word = w("AaABba");
        assert_eq!(word.alphabet_size(), 2);
        assert_eq!(
            word.letters(),
            &[
                Letter::unbarred(1),
                Letter::barred(1),
                Letter::unbarred(1),
                Letter::unbarred(2),
                Letter::barred(2),
                Letter::barred(1)
            ]
        );
    }

    #[test]
    fn parses_token_form() {
        let word = w("A3 a3");
        assert_eq!(word.alphabet_size(), 3);
        assert_eq!(word.letters(), &[Letter::unbarred(3), Letter::barred(3)]);
        assert_eq!(w("A1,a1, A2"), w("AaB"));
    }

    #[test]
    fn rejects_malformed_tokens() {
        assert_eq!(
            parse_word("Ax9", None),
            Err(ParseError::MalformedToken("Ax9".into()))
        );
        assert!(matches!(parse_word("A0 a0", None), Err(ParseError::MalformedToken(_))));
        assert!(matches!(parse_word("B1 x2", None), Err(ParseError::MalformedToken(_))));
        assert!(matches!(
            parse_word("Aa-", None),
            Err(ParseError::InvalidCharacter { ch: '-', position: 2 })
        ));
    }

    #[test]
    fn override_bounds_alphabet() {
        assert_eq!(parse_word("Aa", Some(3)).unwrap().alphabet_size(), 3);
        assert_eq!(
            parse_word("AaCc", Some(2)),
            Err(ParseError::Word(WordError::LetterOutOfRange { index: 3, m: 2 }))
        );
    }

    #[test]
    fn empty_text_is_empty_word() {
        let e = w("");
        assert!(e.is_empty());
        assert_eq!(e.alphabet_size(), 1);
        assert!(is_foldable(&e));
    }

    #[test]
    fn formats_large_alphabets_as_tokens() {
        let word = parse_word("A27 a27 A1", None).unwrap();
        assert_eq!(word.to_string(), "A27 a27 A1");
        assert_eq!(w("AaABba").to_string(), "AaABba");
    }

    #[test]
    fn foldability_by_reduction() {
        assert!(is_foldable(&w("Aa")));
        assert!(!is_foldable(&w("AAAA")));
        assert!(is_foldable(&w("AbBa")));
        assert!(!is_foldable(&w("AaA")));
        assert!(!is_foldable(&w("ABab")));
    }

    #[test]
    fn doubling_examples() {
        let d = doubled(&w("AaAAaa")).unwrap();
        assert_eq!(d.to_string(), "AaAbBa");
        assert_eq!(d.alphabet_size(), 2);

        let d = doubled(&w("AaABba")).unwrap();
        assert_eq!(d.to_string(), "AaAdDa");
        assert_eq!(d.alphabet_size(), 4);

        let e = doubled(&w("")).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.alphabet_size(), 2);

        assert_eq!(doubled(&w("AaA")), Err(WordError::OddLength { len: 3 }));
    }

    #[test]
    fn undoubling_inverts() {
        let orig = parse_word("AaABba", Some(2)).unwrap();
        assert_eq!(undoubled(&doubled(&orig).unwrap()).unwrap(), orig);
    }

    #[test]
    fn alternation() {
        assert!(is_alternating(&w("AaAbBa")));
        assert!(!is_alternating(&w("AaAAaa")));
        assert!(is_alternating(&w("")));
    }

    #[test]
    fn b_subword_runs() {
        let mut s = String::from("Aa");
        s.push_str(&"Bb".repeat(5));
        s.push_str("Aa");
        s.push_str(&"Bb".repeat(7));
        s.push_str("Aa");
        s.push_str(&"Bb".repeat(4));
        assert_eq!(maximal_b_subword_lengths(&w(&s), false).unwrap(), vec![10, 14, 8]);

        let aa = parse_word("AaAa", Some(2)).unwrap();
        assert_eq!(maximal_b_subword_lengths(&aa, false).unwrap(), vec![]);

        assert_eq!(maximal_b_subword_lengths(&w("AbBaBbAa"), false).unwrap(), vec![2, 2]);
    }

    #[test]
    fn b_subword_preconditions() {
        assert!(matches!(
            maximal_b_subword_lengths(&w("AaAa"), false),
            Err(WordError::AlphabetSize { expected: 2, found: 1 })
        ));
        assert!(matches!(
            maximal_b_subword_lengths(&w("AaBB"), false),
            Err(WordError::NotAlternating { position: 3 })
        ));
        let starts_with_b = w("BbAa");
        assert!(matches!(
            maximal_b_subword_lengths(&starts_with_b, false),
            Err(WordError::LeadingLetter { .. })
        ));
        assert_eq!(maximal_b_subword_lengths(&starts_with_b, true).unwrap(), vec![2]);
    }
}
