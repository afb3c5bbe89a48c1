use alloc::vec;
use alloc::vec::Vec;

use crate::trees::classify_one_foldable;
use crate::words::{reduces_to_empty, Letter, Word};

/// `w = u1 X v1 X̄ u2 X v2 X̄ u3` with `u1u3`, `u2`, `v1`, `v2` foldable and both
/// `u1 u2 X X̄ u3` and `X v1 v2 X̄` one-foldable. `X` may be a barred letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ADecomposition {
    pub letter: Letter,
    /// 0-based positions of `X, X̄, X, X̄`.
    pub positions: [usize; 4],
    pub u1: Word,
    pub v1: Word,
    pub u2: Word,
    pub v2: Word,
    pub u3: Word,
}

impl ADecomposition {
    /// Concatenates the segments back into the source word.
    pub fn reassemble(&self) -> Word {
        let x = [self.letter];
        let xb = [self.letter.complement()];
        Word::concat(
            self.u1.alphabet_size(),
            &[
                self.u1.letters(),
                &x,
                self.v1.letters(),
                &xb,
                self.u2.letters(),
                &x,
                self.v2.letters(),
                &xb,
                self.u3.letters(),
            ],
        )
    }
}

/// `table[i][j]`: whether `letters[i..j]` reduces to the empty word.
fn interval_foldable(letters: &[Letter]) -> Vec<Vec<bool>> {
    let len = letters.len();
    let mut table = vec![vec![false; len + 1]; len + 1];
    for (i, row) in table.iter_mut().enumerate() {
        let mut stack: Vec<Letter> = Vec::new();
        row[i] = true;
        for j in i..len {
            match stack.last() {
                Some(&top) if top.is_complement_of(letters[j]) => {
                    stack.pop();
                }
                _ => stack.push(letters[j]),
            }
            row[j + 1] = stack.is_empty();
        }
    }
    table
}

/// The lexicographically least A-decomposition of `w`, if any. A word has one
/// exactly when it has two foldings.
pub fn find_a_decomposition(w: &Word) -> Option<ADecomposition> {
    let letters = w.letters();
    let len = letters.len();
    if !w.is_foldable() {
        return None;
    }
    let m = w.alphabet_size();
    let foldable = interval_foldable(letters);
    let mut joined: Vec<Letter> = Vec::with_capacity(len);
    for p1 in 0..len {
        let x = letters[p1];
        let xb = x.complement();
        for p2 in p1 + 1..len {
            if letters[p2] != xb || !foldable[p1 + 1][p2] {
                continue;
            }
            for p3 in p2 + 1..len {
                if letters[p3] != x || !foldable[p2 + 1][p3] {
                    continue;
                }
                for p4 in p3 + 1..len {
                    if letters[p4] != xb || !foldable[p3 + 1][p4] {
                        continue;
                    }
                    joined.clear();
                    joined.extend_from_slice(&letters[..p1]);
                    joined.extend_from_slice(&letters[p4 + 1..]);
                    if !reduces_to_empty(&joined) {
                        continue;
                    }
                    // u1 u2 X X̄ u3
                    joined.clear();
                    joined.extend_from_slice(&letters[..p1]);
                    joined.extend_from_slice(&letters[p2 + 1..p3]);
                    joined.extend_from_slice(&[x, xb]);
                    joined.extend_from_slice(&letters[p4 + 1..]);
                    if !classify_one_foldable(&Word::concat(m, &[&joined])) {
                        continue;
                    }
                    // X v1 v2 X̄
                    joined.clear();
                    joined.push(x);
                    joined.extend_from_slice(&letters[p1 + 1..p2]);
                    joined.extend_from_slice(&letters[p3 + 1..p4]);
                    joined.push(xb);
                    if !classify_one_foldable(&Word::concat(m, &[&joined])) {
                        continue;
                    }
                    return Some(ADecomposition {
                        letter: x,
                        positions: [p1, p2, p3, p4],
                        u1: w.slice(0..p1),
                        v1: w.slice(p1 + 1..p2),
                        u2: w.slice(p2 + 1..p3),
                        v2: w.slice(p3 + 1..p4),
                        u3: w.slice(p4 + 1..len),
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        parse_word(s, None).unwrap()
    }

    #[test]
    fn examples() {
        let d = find_a_decomposition(&w("AaAa")).unwrap();
        assert_eq!(d.letter, Letter::unbarred(1));
        assert_eq!(d.positions, [0, 1, 2, 3]);
        assert!([&d.u1, &d.v1, &d.u2, &d.v2, &d.u3].iter().all(|s| s.is_empty()));

        let word = w("AaABba");
        let d = find_a_decomposition(&word).unwrap();
        assert_eq!(d.positions, [0, 1, 2, 5]);
        assert_eq!(d.v2.to_string(), "Bb");
        assert!(d.u1.is_empty() && d.v1.is_empty() && d.u2.is_empty() && d.u3.is_empty());
        assert_eq!(d.reassemble(), word);

        assert_eq!(find_a_decomposition(&w("AAaa")), None);
        assert_eq!(find_a_decomposition(&w("AaAaAa")), None);
        assert_eq!(find_a_decomposition(&w("AAAA")), None);
    }

    #[test]
    fn barred_letter() {
        let d = find_a_decomposition(&w("aAaA")).unwrap();
        assert_eq!(d.letter, Letter::barred(1));
    }
}
