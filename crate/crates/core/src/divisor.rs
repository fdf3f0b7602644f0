//! Divisor sums `sigma_k(n) = sum_{d | n} d^k`.
//!
//! [`sigma_sieve`] is the production path. [`sigma_naive`] is an
//! independent trial-division implementation kept as a cross-check.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::Series;

/// `sigma_k(n)` by trial division up to `sqrt(n)`.
pub fn sigma_naive(k: u32, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain);
    }
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d).pow(k);
            let co = n / d;
            if co != d {
                total += BigInt::from(co).pow(k);
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Table of `sigma_k(n)` for `1 <= n <= limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTable {
    k: u32,
    // values[0] is unused and kept at zero
    values: Vec<BigInt>,
}

impl SigmaTable {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    /// `sigma_k(n)`, or `None` outside `1..=limit`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        if n == 0 {
            None
        } else {
            self.values.get(n)
        }
    }

    /// `(n, sigma_k(n))` for `n = 1..=limit`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.values.iter().enumerate().skip(1)
    }
}

/// Sieve: for every `d <= limit`, add `d^k` to each multiple of `d`.
/// A limit of zero yields an empty table.
pub fn sigma_sieve(k: u32, limit: usize) -> SigmaTable {
    let mut values = vec![BigInt::zero(); limit + 1];
    for d in 1..=limit {
        let dk = if k == 0 {
            BigInt::one()
        } else {
            BigInt::from(d).pow(k)
        };
        for slot in values[d..].iter_mut().step_by(d) {
            *slot += &dk;
        }
    }
    SigmaTable { k, values }
}

/// `sum_{N >= 1} sigma_k(N) q^{stride*N}` truncated at `order`.
pub fn sigma_gf(k: u32, stride: usize, order: usize) -> Result<Series> {
    if stride == 0 {
        return Err(Error::Config("stride must be positive".into()));
    }
    let limit = order.saturating_sub(1) / stride;
    let table = sigma_sieve(k, limit);
    let mut coeffs = Series::zero(order)?.into_coeffs();
    for (n, v) in table.iter() {
        coeffs[n * stride] = v.clone();
    }
    Series::from_coeffs(coeffs)
}
