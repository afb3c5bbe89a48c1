use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::trees::DegreeMultiset;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C_i = binom(2i, i) / (i + 1)`.
pub fn catalan(i: usize) -> BigUint {
    binomial(2 * i as u64, i as u64) / (i as u64 + 1)
}

/// `(Σ parts)! / ∏ parts!`.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u64;
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Proper `k`-edge-colorings of any plane tree (with at least one edge) having
/// degree multiset `d`: `k ∏_i ((k-1)(k-2)⋯(k-i+1))^{α_i}`, with `0^0 = 1`.
/// Vanishes when the maximum degree exceeds `k`.
pub fn proper_coloring_count(d: &DegreeMultiset, k: u64) -> BigUint {
    let mut acc = BigUint::from(k);
    for (deg, &alpha) in (1u64..).zip(d.alpha()) {
        if alpha == 0 {
            continue;
        }
        if deg > k {
            return BigUint::zero();
        }
        // binom(k-1, deg-1) * (deg-1)! is the falling factorial (k-1)_(deg-1)
        let mut factor = BigUint::one();
        for j in 1..deg {
            factor *= k - j;
        }
        acc *= factor.pow(alpha as u32);
    }
    acc
}

/// Number of plane trees with degree multiset `d`:
/// `(2/α₁) · multinomial(α₁-1, α₂, α₃, …)` when the leaf identity holds, else 0.
pub fn rpt(d: &DegreeMultiset) -> BigUint {
    let alpha = d.alpha();
    if alpha.is_empty() || alpha[0] == 0 || !d.satisfies_leaf_identity() {
        return BigUint::zero();
    }
    let mut parts = Vec::with_capacity(alpha.len());
    parts.push(alpha[0] - 1);
    parts.extend_from_slice(&alpha[1..]);
    let twice = multinomial(&parts) * 2u32;
    let (q, r) = twice.div_rem(&BigUint::from(alpha[0]));
    assert!(r.is_zero(), "plane tree count {twice}/{} is not integral", alpha[0]);
    q
}

/// All degree multisets of plane trees with `n` edges and maximum degree at most
/// `k`. The degrees above 2 are free (bounded by the edge count); `α₂` and `α₁`
/// follow from `Σ i·α_i = 2n` and the leaf identity. Lexicographic in
/// `(α₃, α₄, …)`.
pub fn degree_sequences(n: u64, k: u64) -> DegreeSequences {
    DegreeSequences::new(n, k)
}

#[derive(Debug, Clone)]
pub struct DegreeSequences {
    n: u64,
    k: u64,
    /// α₃, α₄, … up to the effective maximum degree
    high: Vec<u64>,
    done: bool,
}

impl DegreeSequences {
    fn new(n: u64, k: u64) -> DegreeSequences {
        let top = k.min(n.max(2));
        let high = vec![0; top.saturating_sub(2) as usize];
        DegreeSequences {
            n,
            k,
            high,
            done: n == 0 || k == 0,
        }
    }

    fn weight(&self) -> u64 {
        // Σ (i-1) α_i over i ≥ 3
        self.high.iter().enumerate().map(|(p, &a)| (p as u64 + 2) * a).sum()
    }

    fn current(&self) -> DegreeMultiset {
        let alpha2 = self.n - 1 - self.weight();
        let alpha1 = 2 + self
            .high
            .iter()
            .enumerate()
            .map(|(p, &a)| (p as u64 + 1) * a)
            .sum::<u64>();
        let mut alpha = vec![alpha1, alpha2];
        alpha.extend_from_slice(&self.high);
        DegreeMultiset::new(alpha)
    }

    fn advance(&mut self) {
        let budget = self.n - 1;
        let mut weight = self.weight();
        for p in (0..self.high.len()).rev() {
            let step = p as u64 + 2;
            if weight + step <= budget {
                self.high[p] += 1;
                return;
            }
            weight -= step * self.high[p];
            self.high[p] = 0;
        }
        self.done = true;
    }
}

impl Iterator for DegreeSequences {
    type Item = DegreeMultiset;

    fn next(&mut self) -> Option<DegreeMultiset> {
        if self.done {
            return None;
        }
        if self.k == 1 {
            // only a single edge has all degrees at most 1
            self.done = true;
            return (self.n == 1).then(|| DegreeMultiset::new(vec![2]));
        }
        let d = self.current();
        self.advance();
        Some(d)
    }
}

/// Words of length `2n` over `m` letters and their complements with exactly one
/// folding: `Σ_α RPT(α) · (proper 2m-edge-colorings of a tree with multiset α)`.
pub fn count_one_foldable(n: u64, m: u32) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let colors = 2 * m as u64;
    degree_sequences(n, colors)
        .map(|d| rpt(&d) * proper_coloring_count(&d, colors))
        .sum()
}
