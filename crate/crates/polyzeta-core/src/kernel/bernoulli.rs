//! Bernoulli numbers as exact rationals.
//!
//! Computed by the defining recurrence sum C(m+1, j) B_j = 0 (B_1 = -1/2
//! convention) and memoized, since the gamma and zeta kernels revisit the
//! same prefix constantly.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn cache() -> &'static Mutex<Vec<BigRational>> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

/// Exact binomial coefficient C(n, k).
pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Exact factorial n!.
pub fn factorial_big(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Bernoulli number B_m for any m ≥ 0 (B_1 = -1/2).
pub fn bernoulli(m: usize) -> BigRational {
    let mut cache = cache().lock().expect("bernoulli cache poisoned");
    while cache.len() <= m {
        let n = cache.len(); // computing B_n
        let mut acc = BigRational::zero();
        for (j, bj) in cache.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let c = binomial_big(n as u64 + 1, j as u64);
            acc += BigRational::from_integer(c) * bj;
        }
        let bn = -acc / BigRational::from_integer(BigInt::from(n as u64 + 1));
        cache.push(bn);
    }
    cache[m].clone()
}

/// B_{2n} for n ≥ 1, the even-index numbers used everywhere downstream.
pub fn bernoulli_even(n: u32) -> Result<BigRational> {
    if n < 1 {
        return Err(Error::Domain(format!("bernoulli_even requires n >= 1, got {n}")));
    }
    Ok(bernoulli(2 * n as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli_even(1).unwrap(), q(1, 6));
        assert_eq!(bernoulli_even(2).unwrap(), q(-1, 30));
        assert_eq!(bernoulli_even(3).unwrap(), q(1, 42));
        assert_eq!(bernoulli_even(4).unwrap(), q(-1, 30));
        assert_eq!(bernoulli_even(5).unwrap(), q(5, 66));
        assert_eq!(bernoulli_even(6).unwrap(), q(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        for m in [3usize, 5, 7, 9, 11] {
            assert!(bernoulli(m).is_zero());
        }
    }

    #[test]
    fn domain_error() {
        assert!(bernoulli_even(0).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_big(4, 2), BigInt::from(6));
        assert_eq!(binomial_big(30, 15), BigInt::from(155117520u64));
        assert_eq!(binomial_big(3, 5), BigInt::zero());
    }
}
