use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{catalan_u128, RsetError};

/// Largest sum range [`z_set`] will tabulate.
pub const Z_BUDGET: u128 = 1 << 27;

/// Partitions of `total` into at most `max_parts` parts, each at least `min_part`,
/// as non-decreasing part lists.
fn partitions(total: usize, max_parts: usize, min_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    if max_parts == 0 {
        return;
    }
    for part in min_part..=total {
        prefix.push(part);
        partitions(total - part, max_parts - 1, part, prefix, out);
        prefix.pop();
    }
}

fn check_t(n: usize, t: usize) -> Result<(), RsetError> {
    if t > n / 2 {
        Err(RsetError::InvalidParameter("t must satisfy 0 <= t <= n/2"))
    } else {
        Ok(())
    }
}

/// Products `C_{b_1} ⋯ C_{b_j}` over `b_1 + ⋯ + b_j = n - t`, `1 <= j <= t + 1`,
/// parts at least 1.
pub fn y_set(n: usize, t: usize) -> Result<BTreeSet<u128>, RsetError> {
    check_t(n, t)?;
    let mut parts = Vec::new();
    partitions(n - t, t + 1, 1, &mut Vec::new(), &mut parts);
    let mut out = BTreeSet::new();
    for p in parts {
        let mut product = 1u128;
        for b in p {
            product = product.checked_mul(catalan_u128(b)?).ok_or(RsetError::Overflow)?;
        }
        out.insert(product);
    }
    Ok(out)
}

/// Sums of at most `C_t` elements of [`y_set`], repetition allowed.
pub fn z_set(n: usize, t: usize) -> Result<BTreeSet<u128>, RsetError> {
    let y: Vec<u128> = y_set(n, t)?.into_iter().collect();
    let terms = catalan_u128(t)?;
    let max_y = *y.last().expect("y_set is never empty");
    let cap = terms.checked_mul(max_y).ok_or(RsetError::Overflow)?;
    if cap > Z_BUDGET {
        return Err(RsetError::BudgetExceeded {
            required: cap,
            budget: Z_BUDGET,
        });
    }
    let cap = cap as usize;
    // fewest terms reaching each sum
    let mut fewest = vec![u32::MAX; cap + 1];
    fewest[0] = 0;
    for s in 1..=cap {
        let mut best = u32::MAX;
        for &v in &y {
            let v = v as usize;
            if v > s {
                break;
            }
            best = best.min(fewest[s - v].saturating_add(1));
        }
        fewest[s] = best;
    }
    Ok(fewest
        .iter()
        .enumerate()
        .filter(|&(_, &h)| h as u128 <= terms)
        .map(|(s, _)| s as u128)
        .collect())
}

/// Union of [`z_set`] over `0 <= t <= n/2`: every fold count of a length-`2n`
/// word over one letter lies in it.
pub fn r_superset(n: usize) -> Result<BTreeSet<u128>, RsetError> {
    let mut out = BTreeSet::new();
    for t in 0..=n / 2 {
        out.append(&mut z_set(n, t)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopGapReport {
    pub n: usize,
    /// `C_{n-2} + C_2 C_{n-4}`
    pub threshold: u128,
    /// `C_{n-2}+C_{n-3}`, `C_3 C_{n-3}`, `C_2 C_{n-2}`, `C_{n-1}`, `C_n`, increasing
    pub top_values: [u128; 5],
    /// Superset elements above the threshold.
    pub above_threshold: Vec<u128>,
    /// Maximal runs `(lo, hi)` of integers in `(threshold, C_n)` missing from the
    /// superset, inclusive.
    pub gaps: Vec<(u128, u128)>,
}

/// Checks that above `C_{n-2} + C_2 C_{n-4}` the superset holds only the five
/// top values, for `n >= 13`.
pub fn top_gap_report(n: usize) -> Result<TopGapReport, RsetError> {
    if n < 13 {
        return Err(RsetError::InvalidParameter("top gap report needs n >= 13"));
    }
    let c = |i: usize| catalan_u128(i);
    let threshold = c(n - 2)? + c(2)? * c(n - 4)?;
    let top_values = [
        c(n - 2)? + c(n - 3)?,
        c(3)? * c(n - 3)?,
        c(2)? * c(n - 2)?,
        c(n - 1)?,
        c(n)?,
    ];
    let superset = r_superset(n)?;
    let above: Vec<u128> = superset.range(threshold + 1..).copied().collect();
    let stray: Vec<u128> = above.iter().copied().filter(|v| !top_values.contains(v)).collect();
    if !stray.is_empty() {
        return Err(RsetError::TopGapViolation { values: stray });
    }
    let mut gaps = Vec::new();
    let mut prev = threshold;
    for &v in &above {
        if v > prev + 1 {
            gaps.push((prev + 1, v - 1));
        }
        prev = v;
    }
    Ok(TopGapReport {
        n,
        threshold,
        top_values,
        above_threshold: above,
        gaps,
    })
}
