use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use super::RsetError;
use crate::enumeration::catalan;
use crate::words::{Letter, Word};

/// Single-letter word families with a known number of foldings. `A` is `A_1`
/// and `a` its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(Aa)^n`, `C_n` foldings.
    Maximal { n: usize },
    /// `(Aa)^t (aA)^(n-t)`, `C_t C_{n-t}` foldings.
    Product { t: usize, n: usize },
    /// `(Aa)^(n-3) aAAaaA`, `C_{n-2} + C_{n-3}` foldings, `n >= 3`.
    NearMax { n: usize },
    /// `(aA)^l A^(n-l-j) a^j A^j a^(n-l-j)`, `(j+1) C_l` foldings, `2j <= n-l`.
    Jcl { j: usize, l: usize, n: usize },
    /// `a A^l a^j A^j a^l A` with `j = n-1-l` and `1 <= l < n`: `2j+2` foldings
    /// when `j < l`, else `2l+3`.
    Small { l: usize, n: usize },
    /// `A^i a^n A^(n-i)`, one folding.
    Staircase { i: usize, n: usize },
    /// `A^(n-2) aa AA a^(n-2)`, three foldings, `n >= 4`.
    Three { n: usize },
}

const UP: Letter = Letter::unbarred(1);
const DOWN: Letter = Letter::barred(1);

fn push(out: &mut Vec<Letter>, pattern: &[Letter], times: usize) {
    for _ in 0..times {
        out.extend_from_slice(pattern);
    }
}

impl Family {
    pub const NAMES: [&'static str; 7] = ["maximal", "product", "nearmax", "jcl", "small", "staircase", "three"];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Maximal { .. } => "maximal",
            Family::Product { .. } => "product",
            Family::NearMax { .. } => "nearmax",
            Family::Jcl { .. } => "jcl",
            Family::Small { .. } => "small",
            Family::Staircase { .. } => "staircase",
            Family::Three { .. } => "three",
        }
    }

    /// Half the word length.
    pub fn n(&self) -> usize {
        match *self {
            Family::Maximal { n }
            | Family::Product { n, .. }
            | Family::NearMax { n }
            | Family::Jcl { n, .. }
            | Family::Small { n, .. }
            | Family::Staircase { n, .. }
            | Family::Three { n } => n,
        }
    }

    pub fn validate(&self) -> Result<(), RsetError> {
        let ok = match *self {
            Family::Maximal { .. } => true,
            Family::Product { t, n } => t <= n,
            Family::NearMax { n } => n >= 3,
            Family::Jcl { j, l, n } => l <= n && 2 * j <= n - l,
            Family::Small { l, n } => 1 <= l && l < n,
            Family::Staircase { i, n } => i <= n,
            Family::Three { n } => n >= 4,
        };
        if ok {
            Ok(())
        } else {
            Err(RsetError::InvalidParameter(match self {
                Family::Maximal { .. } => unreachable!(),
                Family::Product { .. } => "product needs t <= n",
                Family::NearMax { .. } => "nearmax needs n >= 3",
                Family::Jcl { .. } => "jcl needs l <= n and 2j <= n - l",
                Family::Small { .. } => "small needs 1 <= l < n",
                Family::Staircase { .. } => "staircase needs i <= n",
                Family::Three { .. } => "three needs n >= 4",
            }))
        }
    }

    pub fn word(&self) -> Result<Word, RsetError> {
        self.validate()?;
        let mut w = Vec::with_capacity(2 * self.n());
        match *self {
            Family::Maximal { n } => push(&mut w, &[UP, DOWN], n),
            Family::Product { t, n } => {
                push(&mut w, &[UP, DOWN], t);
                push(&mut w, &[DOWN, UP], n - t);
            }
            Family::NearMax { n } => {
                push(&mut w, &[UP, DOWN], n - 3);
                w.extend_from_slice(&[DOWN, UP, UP, DOWN, DOWN, UP]);
            }
            Family::Jcl { j, l, n } => {
                push(&mut w, &[DOWN, UP], l);
                push(&mut w, &[UP], n - l - j);
                push(&mut w, &[DOWN], j);
                push(&mut w, &[UP], j);
                push(&mut w, &[DOWN], n - l - j);
            }
            Family::Small { l, n } => {
                let j = n - 1 - l;
                w.push(DOWN);
                push(&mut w, &[UP], l);
                push(&mut w, &[DOWN], j);
                push(&mut w, &[UP], j);
                push(&mut w, &[DOWN], l);
                w.push(UP);
            }
            Family::Staircase { i, n } => {
                push(&mut w, &[UP], i);
                push(&mut w, &[DOWN], n);
                push(&mut w, &[UP], n - i);
            }
            Family::Three { n } => {
                push(&mut w, &[UP], n - 2);
                push(&mut w, &[DOWN], 2);
                push(&mut w, &[UP], 2);
                push(&mut w, &[DOWN], n - 2);
            }
        }
        Ok(Word::new(w, 1).expect("single-letter word"))
    }

    /// The proven number of foldings of [`Family::word`].
    pub fn expected(&self) -> Result<BigUint, RsetError> {
        self.validate()?;
        Ok(match *self {
            Family::Maximal { n } => catalan(n),
            Family::Product { t, n } => catalan(t) * catalan(n - t),
            Family::NearMax { n } => catalan(n - 2) + catalan(n - 3),
            Family::Jcl { j, l, .. } => catalan(l) * (j as u64 + 1),
            Family::Small { l, n } => {
                let j = n - 1 - l;
                BigUint::from(if j < l { 2 * j + 2 } else { 2 * l + 3 })
            }
            Family::Staircase { .. } => BigUint::from(1u32),
            Family::Three { .. } => BigUint::from(3u32),
        })
    }

    /// Every valid member with word length at most `max_len`.
    pub fn all_up_to(max_len: usize) -> Vec<Family> {
        let mut out = Vec::new();
        for n in 0..=max_len / 2 {
            out.push(Family::Maximal { n });
            out.extend((0..=n).map(|t| Family::Product { t, n }));
            out.push(Family::NearMax { n });
            for l in 0..=n {
                out.extend((0..=(n - l) / 2).map(|j| Family::Jcl { j, l, n }));
            }
            out.extend((1..n).map(|l| Family::Small { l, n }));
            out.extend((0..=n).map(|i| Family::Staircase { i, n }));
            out.push(Family::Three { n });
        }
        out.retain(|f| f.validate().is_ok());
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Maximal { n } => write!(f, "maximal(n={n})"),
            Family::Product { t, n } => write!(f, "product(t={t}, n={n})"),
            Family::NearMax { n } => write!(f, "nearmax(n={n})"),
            Family::Jcl { j, l, n } => write!(f, "jcl(j={j}, l={l}, n={n})"),
            Family::Small { l, n } => write!(f, "small(l={l}, n={n})"),
            Family::Staircase { i, n } => write!(f, "staircase(i={i}, n={n})"),
            Family::Three { n } => write!(f, "three(n={n})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foldings::count_foldings;
    use alloc::string::ToString;

    #[test]
    fn worked_examples() {
        let f = Family::Jcl { j: 1, l: 1, n: 4 };
        assert_eq!(f.word().unwrap().to_string(), "aAAAaAaa");
        assert_eq!(f.expected().unwrap(), BigUint::from(2u32));
        let f = Family::Small { l: 1, n: 5 };
        assert_eq!(f.word().unwrap().to_string(), "aAaaaAAAaA");
        assert_eq!(f.expected().unwrap(), BigUint::from(5u32));
        let f = Family::Product { t: 2, n: 5 };
        assert_eq!(f.word().unwrap().to_string(), "AaAaaAaAaA");
        assert_eq!(f.expected().unwrap(), BigUint::from(10u32));
        assert_eq!(Family::Three { n: 4 }.word().unwrap().to_string(), "AAaaAAaa");
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Family::Small { l: 0, n: 3 }.word().is_err());
        assert!(Family::Three { n: 3 }.expected().is_err());
        assert!(Family::Jcl { j: 2, l: 1, n: 4 }.word().is_err());
        assert!(Family::NearMax { n: 2 }.word().is_err());
    }

    #[test]
    fn counts_up_to_length_14() {
        for f in Family::all_up_to(14) {
            let w = f.word().unwrap();
            assert_eq!(w.len(), 2 * f.n());
            assert_eq!(count_foldings(&w), f.expected().unwrap(), "{f}");
        }
    }
}
