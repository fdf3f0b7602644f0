//! Dense truncated formal power series with exact integer coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `q^0 .. q^{N-1}`.
//! Everything at degree `N` and above is unknown, not zero. Binary
//! operations require equal orders and never change the order of their
//! operands; mixing orders is an error rather than a silent re-truncation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sign `s` in a factor `1 - s*q^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `self^t`.
    pub fn pow(self, t: usize) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus if t.is_multiple_of(2) => 1,
            Sign::Minus => -1,
        }
    }
}

/// A single term `coefficient * q^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpTerm {
    pub coefficient: BigInt,
    pub exponent: usize,
}

impl ExpTerm {
    pub fn new(coefficient: impl Into<BigInt>, exponent: usize) -> Self {
        ExpTerm {
            coefficient: coefficient.into(),
            exponent,
        }
    }
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Series")
            .field("order", &self.order())
            .field(
                "coeffs",
                &self
                    .coeffs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match e {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

impl Series {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(Self::zeros_unchecked(order))
    }

    pub(crate) fn zeros_unchecked(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    /// The multiplicative identity.
    pub fn one(order: usize) -> Result<Self> {
        Self::monomial(1, 0, order)
    }

    /// `c * q^e`, or the zero series when `e` is beyond the truncation order.
    pub fn monomial(c: impl Into<BigInt>, e: usize, order: usize) -> Result<Self> {
        let mut s = Self::zero(order)?;
        if e < order {
            s.coeffs[e] = c.into();
        }
        Ok(s)
    }

    /// Builds a series from explicit coefficients; the order is their count.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        check_order(coeffs.len())?;
        Ok(Series { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Expansion of `1 / (1 - sign*q^j)`, i.e. `sum_t sign^t q^{jt}`.
    pub fn geom(sign: Sign, j: usize, order: usize) -> Result<Self> {
        if j == 0 {
            return Err(Error::DivergentExpansion);
        }
        let mut s = Self::zero(order)?;
        for (t, e) in (0..order).step_by(j).enumerate() {
            s.coeffs[e] = BigInt::from(sign.pow(t));
        }
        Ok(s)
    }

    /// `(q^c; q^d)_inf`, the product of `1 - q^{c + d*j}` over all `j >= 0`.
    /// Factors with `c + d*j >= order` are `1 + O(q^order)` and are skipped.
    pub fn pochhammer_inf(c: usize, d: usize, order: usize) -> Result<Self> {
        if c == 0 || d == 0 {
            return Err(Error::Config(format!(
                "pochhammer needs c >= 1 and d >= 1, got c={c}, d={d}"
            )));
        }
        let mut s = Self::one(order)?;
        let mut p = c;
        while p < order {
            s.mul_binomial_in_place(Sign::Plus, p);
            p += d;
        }
        Ok(s)
    }

    /// `(q^c; q^d)_n`, the finite product of `1 - q^{c + d*j}` for `j < n`.
    pub fn pochhammer_fin(c: usize, d: usize, n: usize, order: usize) -> Result<Self> {
        if c == 0 || d == 0 {
            return Err(Error::Config(format!(
                "pochhammer needs c >= 1 and d >= 1, got c={c}, d={d}"
            )));
        }
        let mut s = Self::one(order)?;
        for j in 0..n {
            let p = c + d * j;
            if p >= order {
                break;
            }
            s.mul_binomial_in_place(Sign::Plus, p);
        }
        Ok(s)
    }

    /// Truncation order (exclusive bound on known degrees).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^e`. Asking past the truncation order is an error.
    pub fn coeff(&self, e: usize) -> Result<&BigInt> {
        self.coeffs.get(e).ok_or(Error::BeyondPrecision {
            exponent: e,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_order(&self, other: &Series) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Series) -> Result<()> {
        self.same_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Series { coeffs })
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Series {
        let c = c.into();
        Series {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    /// Truncated product by schoolbook convolution. This is the reference
    /// multiplication; the sparse kernels below must agree with it exactly.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = Self::zeros_unchecked(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `self^n` by repeated truncated multiplication.
    pub fn pow(&self, n: u32) -> Series {
        let mut out = Self::zeros_unchecked(self.order());
        out.coeffs[0] = BigInt::one();
        for _ in 0..n {
            out = out.mul(self).expect("same order");
        }
        out
    }

    /// Multiplication by `q^s`; the top `s` coefficients fall off.
    pub fn shift(&self, s: usize) -> Series {
        let n = self.order();
        let mut out = Self::zeros_unchecked(n);
        if s < n {
            out.coeffs[s..].clone_from_slice(&self.coeffs[..n - s]);
        }
        out
    }

    /// Same result as `self.mul(&Series::geom(sign, j, order))`, in O(N).
    pub fn mul_geom(&self, sign: Sign, j: usize) -> Result<Series> {
        let mut out = self.clone();
        out.mul_geom_in_place(sign, j)?;
        Ok(out)
    }

    /// In-place division by `1 - sign*q^j`: `b[e] = a[e] + sign*b[e-j]`.
    pub fn mul_geom_in_place(&mut self, sign: Sign, j: usize) -> Result<()> {
        if j == 0 {
            return Err(Error::DivergentExpansion);
        }
        for e in j..self.order() {
            let (lo, hi) = self.coeffs.split_at_mut(e);
            match sign {
                Sign::Plus => hi[0] += &lo[e - j],
                Sign::Minus => hi[0] -= &lo[e - j],
            }
        }
        Ok(())
    }

    /// In-place multiplication by `1 - sign*q^j`.
    pub fn mul_binomial_in_place(&mut self, sign: Sign, j: usize) {
        if j == 0 {
            match sign {
                Sign::Plus => self.coeffs.iter_mut().for_each(|c| *c = BigInt::zero()),
                Sign::Minus => self.coeffs.iter_mut().for_each(|c| *c *= 2),
            }
            return;
        }
        for e in (j..self.order()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(e);
            match sign {
                Sign::Plus => hi[0] -= &lo[e - j],
                Sign::Minus => hi[0] += &lo[e - j],
            }
        }
    }

    /// Inverse of a series whose constant term is `+1` or `-1`.
    pub fn invert_unit(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        let a0_sign = if a0.is_one() {
            1
        } else if *a0 == BigInt::from(-1) {
            -1
        } else {
            return Err(Error::NonUnit(a0.to_string()));
        };
        let n = self.order();
        let mut b = Self::zeros_unchecked(n);
        b.coeffs[0] = BigInt::from(a0_sign);
        for e in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=e {
                let ai = &self.coeffs[i];
                if !ai.is_zero() {
                    acc += ai * &b.coeffs[e - i];
                }
            }
            // b[e] = -a0^{-1} * acc, and a0^{-1} = a0 for units.
            b.coeffs[e] = if a0_sign == 1 { -acc } else { acc };
        }
        Ok(b)
    }

    /// Keeps degrees below `order`. Requires `order <= self.order()`.
    pub fn truncate(&self, order: usize) -> Result<Series> {
        check_order(order)?;
        if order > self.order() {
            return Err(Error::BeyondPrecision {
                exponent: order - 1,
                order: self.order(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..order].to_vec(),
        })
    }

    /// Substitutes `q -> q^factor` and re-truncates at `order`. `self` must
    /// know every degree `e` with `e*factor < order`.
    pub fn dilate(&self, factor: usize, order: usize) -> Result<Series> {
        check_order(order)?;
        if factor == 0 {
            return Err(Error::Config("dilation factor must be positive".into()));
        }
        let needed = order.div_ceil(factor);
        if needed > self.order() {
            return Err(Error::BeyondPrecision {
                exponent: needed - 1,
                order: self.order(),
            });
        }
        let mut out = Self::zeros_unchecked(order);
        for (e, c) in self.coeffs[..needed].iter().enumerate() {
            out.coeffs[e * factor] = c.clone();
        }
        Ok(out)
    }
}

/// Sparse accumulation buffer used by the series builders.
///
/// Terms are summed into `i64` slots with checked arithmetic; a slot that
/// would overflow spills into an arbitrary-precision lane. Terms at or
/// beyond the order are dropped, which is exactly truncation.
#[derive(Debug, Clone)]
pub struct Accumulator {
    small: Vec<i64>,
    big: Option<Vec<BigInt>>,
}

impl Accumulator {
    pub fn new(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(Accumulator {
            small: vec![0; order],
            big: None,
        })
    }

    pub fn order(&self) -> usize {
        self.small.len()
    }

    fn spill(&mut self, e: usize, c: BigInt) {
        let order = self.small.len();
        let big = self.big.get_or_insert_with(|| vec![BigInt::zero(); order]);
        big[e] += c;
    }

    /// Adds `c * q^e`.
    pub fn add(&mut self, e: usize, c: i64) {
        let Some(slot) = self.small.get_mut(e) else {
            return;
        };
        match slot.checked_add(c) {
            Some(v) => *slot = v,
            None => self.spill(e, BigInt::from(c)),
        }
    }

    pub fn push(&mut self, term: ExpTerm) {
        if term.exponent < self.order() {
            self.spill(term.exponent, term.coefficient);
        }
    }

    /// Adds `c * q^start / (1 - sign*q^period)`, expanded up to the order.
    pub fn add_geometric(&mut self, c: i64, start: usize, sign: Sign, period: usize) {
        debug_assert!(period > 0);
        let order = self.order();
        let mut e = start;
        let mut coef = c;
        while e < order {
            self.add(e, coef);
            if sign == Sign::Minus {
                coef = -coef;
            }
            e += period;
        }
    }

    /// Arbitrary-precision version of [`Accumulator::add_geometric`].
    pub fn add_geometric_big(&mut self, c: &BigInt, start: usize, sign: Sign, period: usize) {
        debug_assert!(period > 0);
        let order = self.order();
        let neg = -c;
        let mut e = start;
        let mut t = 0;
        while e < order {
            let term = if sign.pow(t) == 1 {
                c.clone()
            } else {
                neg.clone()
            };
            self.spill(e, term);
            e += period;
            t += 1;
        }
    }

    pub fn into_series(self) -> Series {
        let coeffs = match self.big {
            None => self.small.into_iter().map(BigInt::from).collect(),
            Some(big) => self
                .small
                .into_iter()
                .zip(big)
                .map(|(s, b)| b + s)
                .collect(),
        };
        Series { coeffs }
    }
}
