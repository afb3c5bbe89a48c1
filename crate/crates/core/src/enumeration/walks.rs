use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::counting::binomial;
use super::EnumerationError;

fn require_alphabet(m: u32, min: u32) -> Result<(), EnumerationError> {
    if m < min {
        Err(EnumerationError::AlphabetTooSmall { m, min })
    } else {
        Ok(())
    }
}

/// Closed walks of length `2n` from a fixed vertex of the infinite `m`-regular
/// tree, from the explicit sum
/// `m^{2n} - Σ_{i=1}^{n} m^{1+2(n-i)} (m-1)^i binom(2i,i) / (4i-2)`.
/// `a_0 = 1`.
pub fn closed_walks(n: usize, m: u32) -> Result<BigUint, EnumerationError> {
    require_alphabet(m, 2)?;
    let mm = BigUint::from(m);
    let mut subtracted = BigUint::zero();
    for i in 1..=n {
        let numerator = mm.pow((1 + 2 * (n - i)) as u32)
            * BigUint::from(m - 1).pow(i as u32)
            * binomial(2 * i as u64, i as u64);
        let (q, r) = numerator.div_rem(&BigUint::from(4 * i as u64 - 2));
        assert!(r.is_zero(), "closed-walk term {i} is not integral");
        subtracted += q;
    }
    let total = mm.pow(2 * n as u32);
    assert!(total >= subtracted);
    Ok(total - subtracted)
}

/// Coefficients `a_0..=a_{n_max}` of `2(m-1) / (m-2 + m·sqrt(1-4(m-1)x))`, by power
/// series square root and division. Independent of [`closed_walks`].
pub fn closed_walks_series(n_max: usize, m: u32) -> Result<Vec<BigUint>, EnumerationError> {
    require_alphabet(m, 2)?;
    let len = n_max + 1;
    // p(x) = 1 - 4(m-1)x ; s(x)^2 = p(x), s_0 = 1
    let mut p = alloc::vec![BigInt::zero(); len];
    p[0] = BigInt::one();
    if len > 1 {
        p[1] = -BigInt::from(4u64 * (m as u64 - 1));
    }
    let mut s: Vec<BigInt> = Vec::with_capacity(len);
    s.push(BigInt::one());
    for k in 1..len {
        let mut rhs = p[k].clone();
        for j in 1..k {
            rhs -= &s[j] * &s[k - j];
        }
        let (q, r) = rhs.div_rem(&BigInt::from(2));
        assert!(r.is_zero(), "square-root coefficient {k} is not integral");
        s.push(q);
    }
    // d(x) = (m-2) + m·s(x)
    let mm = BigInt::from(m);
    let d: Vec<BigInt> = s
        .iter()
        .enumerate()
        .map(|(k, sk)| if k == 0 { BigInt::from(m as i64 - 2) + &mm } else { &mm * sk })
        .collect();
    let d0 = d[0].clone();
    let mut f: Vec<BigInt> = Vec::with_capacity(len);
    f.push(BigInt::one());
    for k in 1..len {
        let mut acc = BigInt::zero();
        for j in 1..=k {
            acc += &d[j] * &f[k - j];
        }
        let (q, r) = (-acc).div_rem(&d0);
        assert!(r.is_zero(), "series coefficient {k} is not integral");
        f.push(q);
    }
    Ok(f.into_iter()
        .map(|c| {
            assert!(!c.is_negative());
            c.to_biguint().expect("non-negative")
        })
        .collect())
}

/// Foldable words of length `2n` over `m` letters and their complements:
/// closed walks on the `2m`-regular tree.
pub fn count_foldable(n: usize, m: u32) -> BigUint {
    assert!(m >= 1, "alphabet size must be at least 1");
    closed_walks(n, 2 * m).expect("2m >= 2")
}

/// Natural logarithm of the leading term
/// `(4m-4)^n n^{-3/2} m(m-1) / (sqrt(π) (m-2)^2)`.
pub fn ln_asymptotic_estimate(n: usize, m: u32) -> Result<f64, EnumerationError> {
    require_alphabet(m, 3)?;
    let n = n as f64;
    let m = m as f64;
    Ok(n * libm::log(4.0 * m - 4.0) - 1.5 * libm::log(n) + libm::log(m * (m - 1.0))
        - 0.5 * libm::log(core::f64::consts::PI)
        - 2.0 * libm::log(m - 2.0))
}

/// Leading-term estimate of [`closed_walks`] for `m >= 3`. Overflows to infinity
/// for large `n`; compare in log space with [`ln_asymptotic_estimate`].
pub fn asymptotic_estimate(n: usize, m: u32) -> Result<f64, EnumerationError> {
    ln_asymptotic_estimate(n, m).map(libm::exp)
}

/// `ln(x)` for arbitrarily large `x > 0`.
pub fn ln_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "logarithm of zero");
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().expect("fits in f64"));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 leading bits");
    libm::log(top as f64) + shift as f64 * core::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// Walks on the m-regular tree tracked by distance from the start vertex.
    fn walks_by_distance(steps: usize, m: u64) -> BigUint {
        let mut at = vec![BigUint::zero(); steps + 2];
        at[0] = BigUint::one();
        for _ in 0..steps {
            let mut next = vec![BigUint::zero(); steps + 2];
            for d in 0..=steps {
                if at[d].is_zero() {
                    continue;
                }
                if d == 0 {
                    next[1] += &at[0] * m;
                } else {
                    next[d - 1] += &at[d];
                    next[d + 1] += &at[d] * (m - 1);
                }
            }
            at = next;
        }
        at[0].clone()
    }

    #[test]
    fn small_values() {
        assert_eq!(closed_walks(1, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(closed_walks(2, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(closed_walks(3, 2).unwrap(), BigUint::from(20u32));
        assert_eq!(closed_walks(1, 4).unwrap(), BigUint::from(4u32));
        assert_eq!(closed_walks(2, 4).unwrap(), BigUint::from(28u32));
        assert_eq!(closed_walks(0, 3).unwrap(), BigUint::one());
        assert!(closed_walks(3, 1).is_err());
    }

    #[test]
    fn explicit_series_and_walks_agree() {
        for m in 2..=6u32 {
            let series = closed_walks_series(40, m).unwrap();
            for (n, coeff) in series.iter().enumerate() {
                assert_eq!(&closed_walks(n, m).unwrap(), coeff, "n = {n}, m = {m}");
                if n <= 20 {
                    assert_eq!(walks_by_distance(2 * n, m as u64), *coeff, "n = {n}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn foldable_counts() {
        assert_eq!(count_foldable(2, 1), BigUint::from(6u32));
        assert_eq!(count_foldable(1, 2), BigUint::from(4u32));
        assert_eq!(count_foldable(0, 1), BigUint::one());
        for n in 0..=30u64 {
            assert_eq!(count_foldable(n as usize, 1), binomial(2 * n, n));
        }
    }

    #[test]
    fn estimate_closed_form() {
        let e = asymptotic_estimate(10, 3).unwrap();
        let direct = 6.0 / libm::sqrt(core::f64::consts::PI) * libm::pow(8.0, 10.0) * libm::pow(10.0, -1.5);
        assert!((e - direct).abs() / direct < 1e-12);
        assert!(asymptotic_estimate(10, 2).is_err());
    }

    #[test]
    fn log_of_large_integers() {
        let x = BigUint::from(3u32).pow(5000);
        let expected = 5000.0 * libm::log(3.0);
        assert!((ln_biguint(&x) - expected).abs() < 1e-9 * expected);
        assert!((ln_biguint(&BigUint::from(1000u32)) - libm::log(1000.0)).abs() < 1e-12);
    }
}
