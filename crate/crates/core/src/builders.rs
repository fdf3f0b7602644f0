//! Constructors for the q-series appearing in the double Lambert identities.
//!
//! Every builder expands its own defining sum or product. None of them is
//! computed through an identity it is later compared against.
//!
//! Enumeration rule: a summand `c * q^e / prod(1 - s_i q^{p_i})` is visited
//! iff its smallest exponent `e` is below the order. Each builder states the
//! resulting index bound next to its loop. Double sums are grouped by the
//! index that owns one denominator: the inner sum is accumulated sparsely
//! with its other geometric factor expanded in place, then divided by the
//! outer denominator in O(N).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::divisor::sigma_gf;
use crate::error::{Error, Result};
use crate::series::{check_order, Accumulator, Series, Sign};

/// `2^e` if it fits, otherwise `None` (such a power exceeds every order).
fn pow2(e: u32) -> Option<usize> {
    1usize.checked_shl(e).filter(|&v| v.leading_zeros() > 1)
}

fn dyadic_warn(a: u32, order: usize) {
    if pow2(a).is_none_or(|p| order <= p) {
        log::warn!("order {order} <= 2^{a}: no exponent of the form n*2^{a} is in range");
    }
}

fn require_positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        Err(Error::Config(format!(
            "parameter {name} must be at least 1"
        )))
    } else {
        Ok(())
    }
}

/// `sum_{n>=1} a_n q^n/(1-q^n)`. `weight` must be defined on `1..order`.
pub fn lambert_generic(weight: impl Fn(usize) -> BigInt, order: usize) -> Result<Series> {
    let mut acc = Accumulator::new(order)?;
    for n in 1..order {
        let a = weight(n);
        // a_n lands on every multiple of n
        acc.add_geometric_big(&a, n, Sign::Plus, n);
    }
    Ok(acc.into_series())
}

/// `sum_{m,k>=1} w(m,k) q^{2mk} / ((1+q^k)(1-q^{2m-1}))`.
///
/// With `w = 1` this is [`base_double`]; other weights are candidates for
/// the `sigma_k` scanner.
pub fn weighted_base_double(
    weight: impl Fn(usize, usize) -> BigInt,
    order: usize,
) -> Result<Series> {
    check_order(order)?;
    let mut total = Series::zeros_unchecked(order);
    // smallest exponent for fixed k is 2k (m = 1)
    for k in (1..).take_while(|k| 2 * k < order) {
        let mut inner = Accumulator::new(order)?;
        for m in (1..).take_while(|m| 2 * m * k < order) {
            inner.add_geometric_big(&weight(m, k), 2 * m * k, Sign::Plus, 2 * m - 1);
        }
        let mut inner = inner.into_series();
        inner.mul_geom_in_place(Sign::Minus, k)?;
        total.add_assign(&inner)?;
    }
    Ok(total)
}

/// `sum_{m,k>=1} q^{2mk} / ((1+q^k)(1-q^{2m-1}))`.
pub fn base_double(order: usize) -> Result<Series> {
    dyadic_double(1, order)
}

/// `sum_{n>=1} q^{2n}/(1-q^{2n})^2`, expanded as `sum_{n,t>=1} t q^{2nt}`.
pub fn single_rhs(order: usize) -> Result<Series> {
    let mut acc = Accumulator::new(order)?;
    for n in (1..).take_while(|n| 2 * n < order) {
        // q^{2n} (1 - x)^{-2} with x = q^{2n}: coefficient t+1 at x^t
        for (t, e) in (2 * n..order).step_by(2 * n).enumerate() {
            acc.add(e, t as i64 + 1);
        }
    }
    Ok(acc.into_series())
}

/// `sum_{m,k>=1} q^{mk 2^a} / ((1+q^{k 2^{a-1}})(1-q^{2m-1}))`.
pub fn dyadic_double(a: u32, order: usize) -> Result<Series> {
    require_positive("a", a.into())?;
    check_order(order)?;
    dyadic_warn(a, order);
    let mut total = Series::zeros_unchecked(order);
    let (Some(full), Some(half)) = (pow2(a), pow2(a - 1)) else {
        return Ok(total);
    };
    // smallest exponent for fixed k is k*2^a (m = 1)
    for k in (1..).take_while(|k| k * full < order) {
        let mut inner = Accumulator::new(order)?;
        for m in (1..).take_while(|m| m * k * full < order) {
            inner.add_geometric(1, m * k * full, Sign::Plus, 2 * m - 1);
        }
        let mut inner = inner.into_series();
        inner.mul_geom_in_place(Sign::Minus, k * half)?;
        total.add_assign(&inner)?;
    }
    Ok(total)
}

/// `sum_{m,n>=1} q^{2mn} / ((1+q^{2n-1})(1-q^{2m-1}))`.
pub fn conj2_lhs(order: usize) -> Result<Series> {
    check_order(order)?;
    let mut total = Series::zeros_unchecked(order);
    for n in (1..).take_while(|n| 2 * n < order) {
        let mut inner = Accumulator::new(order)?;
        for m in (1..).take_while(|m| 2 * m * n < order) {
            inner.add_geometric(1, 2 * m * n, Sign::Plus, 2 * m - 1);
        }
        let mut inner = inner.into_series();
        inner.mul_geom_in_place(Sign::Minus, 2 * n - 1)?;
        total.add_assign(&inner)?;
    }
    Ok(total)
}

/// `sum_{n>=1} (n-1) q^n / (1+q^{2n-1})`.
pub fn conj2_rhs(order: usize) -> Result<Series> {
    let mut acc = Accumulator::new(order)?;
    // n = 1 has weight zero
    for n in 2..order {
        acc.add_geometric(n as i64 - 1, n, Sign::Minus, 2 * n - 1);
    }
    Ok(acc.into_series())
}

/// `Y(q) = sum_{m,n>=1} (-q)^{2mn+m} / ((1+q^n)(1-q^{2m-1}))`.
pub fn y_series(order: usize) -> Result<Series> {
    check_order(order)?;
    let mut total = Series::zeros_unchecked(order);
    // smallest exponent for fixed n is 2n+1 (m = 1)
    for n in (1..).take_while(|n| 2 * n + 1 < order) {
        let mut inner = Accumulator::new(order)?;
        for m in (1..).take_while(|m| (2 * n + 1) * m < order) {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            inner.add_geometric(sign, (2 * n + 1) * m, Sign::Plus, 2 * m - 1);
        }
        let mut inner = inner.into_series();
        inner.mul_geom_in_place(Sign::Minus, n)?;
        total.add_assign(&inner)?;
    }
    Ok(total)
}

/// `-q (q^4;q^4)^4 / (q^2;q^2)^2 * sum_{k>=1} q^{2k}/(1+q^{2k})`.
pub fn ct_rhs(order: usize) -> Result<Series> {
    check_order(order)?;
    let p4 = Series::pochhammer_inf(4, 4, order)?.pow(4);
    let p2 = Series::pochhammer_inf(2, 2, order)?;
    let p2_inv = p2.mul(&p2)?.invert_unit()?;
    let mut lambert = Accumulator::new(order)?;
    for k in (1..).take_while(|k| 2 * k < order) {
        lambert.add_geometric(1, 2 * k, Sign::Minus, 2 * k);
    }
    let prod = p4.mul(&p2_inv)?.mul(&lambert.into_series())?;
    Ok(prod.shift(1).neg())
}

/// `E_2(q) = 1 - 24 sum_{n>=1} sigma_1(n) q^{2n}`.
pub fn e2(order: usize) -> Result<Series> {
    Series::one(order)?.sub(&sigma_gf(1, 2, order)?.scale(24))
}

/// `1 - 24 * base_double`, built from the double sum.
pub fn e2_double(order: usize) -> Result<Series> {
    Series::one(order)?.sub(&base_double(order)?.scale(24))
}

/// `sum_{m>=1} q^{2m-1}/(1-q^{2m-1}) * sum_{n>=m} q^{2n}/(1-q^{2n})`.
pub fn lemma21_lhs(order: usize) -> Result<Series> {
    check_order(order)?;
    let mut total = Series::zeros_unchecked(order);
    // smallest exponent of the (m, n) summand: (2m-1) + 2n, and n >= m
    for m in (1..).take_while(|m| 4 * m - 1 < order) {
        let odd = 2 * m - 1;
        let mut tail = Accumulator::new(order)?;
        for n in (m..).take_while(|n| odd + 2 * n < order) {
            tail.add_geometric(1, odd + 2 * n, Sign::Plus, 2 * n);
        }
        let mut tail = tail.into_series();
        tail.mul_geom_in_place(Sign::Plus, odd)?;
        total.add_assign(&tail)?;
    }
    Ok(total)
}

/// `sum_{m>=1} 1/(1-q^{2m-1}) * sum_{n>=m+1} q^{2n-1}/(1-q^{2n-1})`.
pub fn lemma21_rhs(order: usize) -> Result<Series> {
    check_order(order)?;
    let mut total = Series::zeros_unchecked(order);
    // smallest exponent of the (m, n) summand: 2n-1, and n >= m+1
    for m in (1..).take_while(|m| 2 * m + 1 < order) {
        let mut tail = Accumulator::new(order)?;
        for n in (m + 1..).take_while(|n| 2 * n - 1 < order) {
            tail.add_geometric(1, 2 * n - 1, Sign::Plus, 2 * n - 1);
        }
        let mut tail = tail.into_series();
        tail.mul_geom_in_place(Sign::Plus, 2 * m - 1)?;
        total.add_assign(&tail)?;
    }
    Ok(total)
}

/// `sum_{n>=1} q^{(2n-1)s}/(1-q^{(2n-1)r}) * sum_{m>=n+1} q^{(2m-1)r}/(1-q^{(2m-1)r})`.
pub fn lemma22_lhs(r: usize, s: usize, order: usize) -> Result<Series> {
    require_positive("r", r as u64)?;
    require_positive("s", s as u64)?;
    check_order(order)?;
    let mut total = Series::zeros_unchecked(order);
    // smallest exponent of the (n, m) summand: (2n-1)s + (2m-1)r, and m >= n+1
    for n in (1..).take_while(|n| (2 * n - 1) * s + (2 * n + 1) * r < order) {
        let lead = (2 * n - 1) * s;
        let mut tail = Accumulator::new(order)?;
        for m in (n + 1..).take_while(|m| lead + (2 * m - 1) * r < order) {
            let p = (2 * m - 1) * r;
            tail.add_geometric(1, lead + p, Sign::Plus, p);
        }
        let mut tail = tail.into_series();
        tail.mul_geom_in_place(Sign::Plus, (2 * n - 1) * r)?;
        total.add_assign(&tail)?;
    }
    Ok(total)
}

/// `sum_{m>=1} q^{2rm}/(1-q^{2rm}) * sum_{n>=m} q^{rn+s}/(1-q^{2rn+2s})`.
pub fn lemma22_rhs(r: usize, s: usize, order: usize) -> Result<Series> {
    require_positive("r", r as u64)?;
    require_positive("s", s as u64)?;
    check_order(order)?;
    let mut total = Series::zeros_unchecked(order);
    // smallest exponent of the (m, n) summand: 2rm + rn + s, and n >= m
    for m in (1..).take_while(|m| 3 * r * m + s < order) {
        let lead = 2 * r * m;
        let mut tail = Accumulator::new(order)?;
        for n in (m..).take_while(|n| lead + r * n + s < order) {
            tail.add_geometric(1, lead + r * n + s, Sign::Plus, 2 * r * n + 2 * s);
        }
        let mut tail = tail.into_series();
        tail.mul_geom_in_place(Sign::Plus, lead)?;
        total.add_assign(&tail)?;
    }
    Ok(total)
}

/// `F(a) = sum_{m,n>=1} (q^{mn 2^a + 2m-1} - q^{mn 2^a + n 2^{a-1}})
///          / ((1-q^{n 2^a})(1-q^{2m-1}))`.
pub fn f_series(a: u32, order: usize) -> Result<Series> {
    require_positive("a", a.into())?;
    check_order(order)?;
    dyadic_warn(a, order);
    let mut total = Series::zeros_unchecked(order);
    let (Some(full), Some(half)) = (pow2(a), pow2(a - 1)) else {
        return Ok(total);
    };
    // for fixed n the smallest exponent is n*2^a + 1 (m = 1, first numerator term)
    for n in (1..).take_while(|n| n * full + 1 < order) {
        let mut inner = Accumulator::new(order)?;
        for m in 1.. {
            let base = m * n * full;
            let first = base + 2 * m - 1;
            let second = base + n * half;
            if first.min(second) >= order {
                break;
            }
            inner.add_geometric(1, first, Sign::Plus, 2 * m - 1);
            inner.add_geometric(-1, second, Sign::Plus, 2 * m - 1);
        }
        let mut inner = inner.into_series();
        inner.mul_geom_in_place(Sign::Plus, n * full)?;
        total.add_assign(&inner)?;
    }
    Ok(total)
}

/// `D_j = q^j / (1 - q^{2j})`.
pub fn block_d(j: usize, order: usize) -> Result<Series> {
    require_positive("j", j as u64)?;
    Ok(Series::geom(Sign::Plus, 2 * j, order)?.shift(j))
}

/// `E_j = q^{2j} / (1 - q^{2j})`.
pub fn block_e(j: usize, order: usize) -> Result<Series> {
    require_positive("j", j as u64)?;
    Ok(Series::geom(Sign::Plus, 2 * j, order)?.shift(2 * j))
}

/// `D_r * D_{r+s}`.
pub fn telescope_lhs(r: usize, s: usize, order: usize) -> Result<Series> {
    require_positive("s", s as u64)?;
    block_d(r, order)?.mul(&block_d(r + s, order)?)
}

/// `E_r * D_s - D_s * E_{r+s}`.
pub fn telescope_rhs(r: usize, s: usize, order: usize) -> Result<Series> {
    let ds = block_d(s, order)?;
    block_e(r, order)?
        .mul(&ds)?
        .sub(&ds.mul(&block_e(r + s, order)?)?)
}

/// `sum_{m>=1} q^{2m-1}/(1-q^{2m-1})`.
pub fn odd_swap_lhs(order: usize) -> Result<Series> {
    let mut acc = Accumulator::new(order)?;
    for m in (1..).take_while(|m| 2 * m - 1 < order) {
        acc.add_geometric(1, 2 * m - 1, Sign::Plus, 2 * m - 1);
    }
    Ok(acc.into_series())
}

/// `sum_{m>=1} q^m/(1-q^{2m})`.
pub fn odd_swap_rhs(order: usize) -> Result<Series> {
    let mut acc = Accumulator::new(order)?;
    for m in 1..order {
        acc.add_geometric(1, m, Sign::Plus, 2 * m);
    }
    Ok(acc.into_series())
}

/// Target column of the `sigma_k` scanner: `sum_N sigma_k(N) q^{2N}`.
pub fn scanner_candidate(k: u32, order: usize) -> Result<Series> {
    require_positive("k", k.into())?;
    sigma_gf(k, 2, order)
}

/// A weighted double Lambert series offered to the scanner for comparison.
pub struct Candidate {
    pub name: String,
    pub series: Series,
}

/// Exploratory side-by-side of `sigma_k(N)` against a few weighted double
/// Lambert series at exponent `2N`. Makes no claim about any of them.
pub struct ScanReport {
    pub k: u32,
    pub order: usize,
    pub target: Series,
    pub candidates: Vec<Candidate>,
}

pub struct ScanRow<'a> {
    pub exponent: usize,
    pub target: &'a BigInt,
    pub values: Vec<&'a BigInt>,
}

impl ScanReport {
    /// One row per even exponent `2N`, `N >= 1`.
    pub fn rows(&self) -> impl Iterator<Item = ScanRow<'_>> {
        (2..self.order).step_by(2).map(|e| ScanRow {
            exponent: e,
            target: &self.target.coeffs()[e],
            values: self
                .candidates
                .iter()
                .map(|c| &c.series.coeffs()[e])
                .collect(),
        })
    }
}

pub fn scan(k: u32, order: usize) -> Result<ScanReport> {
    let target = scanner_candidate(k, order)?;
    let p = k - 1;
    let candidates = vec![
        Candidate {
            name: format!("k^{p}"),
            series: weighted_base_double(|_, kk| BigInt::from(kk).pow(p), order)?,
        },
        Candidate {
            name: format!("(2m-1)^{p}"),
            series: weighted_base_double(|m, _| BigInt::from(2 * m - 1).pow(p), order)?,
        },
        Candidate {
            name: format!("(mk)^{p}"),
            series: weighted_base_double(|m, kk| BigInt::from(m * kk).pow(p), order)?,
        },
    ];
    Ok(ScanReport {
        k,
        order,
        target,
        candidates,
    })
}

/// `key=value` parameters for parametrised series and identities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, u64>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: u64) -> Self {
        self.0.insert(key.to_string(), value);
        self
    }

    /// Parses entries of the form `a=3`.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let mut out = Params::new();
        for item in items {
            let item = item.as_ref();
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected key=value, got `{item}`")))?;
            let v: u64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("`{v}` is not a natural number")))?;
            out.0.insert(k.trim().to_string(), v);
        }
        Ok(out)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<u64> {
        self.0.get(key).copied()
    }

    pub fn require(&self, key: &str) -> Result<u64> {
        self.get(key)
            .ok_or_else(|| Error::Config(format!("missing parameter {key}=")))
    }

    fn positive(&self, key: &str) -> Result<u64> {
        let v = self.require(key)?;
        require_positive(key, v)?;
        Ok(v)
    }

    fn positive_or(&self, key: &str, default: u64) -> Result<u64> {
        let v = self.get(key).unwrap_or(default);
        require_positive(key, v)?;
        Ok(v)
    }
}

fn to_u32(key: &str, v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Config(format!("parameter {key}={v} is too large")))
}

fn to_usize(key: &str, v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Config(format!("parameter {key}={v} is too large")))
}

/// A series addressable by a stable string identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesSpec {
    Zero,
    BaseDouble,
    SingleRhs,
    SigmaGf {
        k: u32,
        stride: usize,
    },
    DyadicDouble {
        a: u32,
    },
    /// `base_double` with `q -> q^{2^{a-1}}`.
    DilatedBaseDouble {
        a: u32,
    },
    Conj2Lhs,
    Conj2Rhs,
    Y,
    CtRhs,
    E2,
    E2Double,
    Lemma21Lhs,
    Lemma21Rhs,
    Lemma22Lhs {
        r: usize,
        s: usize,
    },
    Lemma22Rhs {
        r: usize,
        s: usize,
    },
    F {
        a: u32,
    },
    BlockD {
        j: usize,
    },
    BlockE {
        j: usize,
    },
    TelescopeLhs {
        r: usize,
        s: usize,
    },
    TelescopeRhs {
        r: usize,
        s: usize,
    },
    OddSwapLhs,
    OddSwapRhs,
    Pochhammer {
        c: usize,
        d: usize,
    },
}

/// Identifiers accepted by [`SeriesSpec::parse`], with their parameters.
pub const SERIES_NAMES: &[(&str, &str)] = &[
    ("zero", ""),
    ("base-double", ""),
    ("single-rhs", ""),
    ("sigma-gf", "k=1 stride=1"),
    ("dyadic-double", "a"),
    ("base-double-dilated", "a"),
    ("conj2-lhs", ""),
    ("conj2-rhs", ""),
    ("y", ""),
    ("ct-rhs", ""),
    ("e2", ""),
    ("e2-double", ""),
    ("lemma21-lhs", ""),
    ("lemma21-rhs", ""),
    ("lemma22-lhs", "r s"),
    ("lemma22-rhs", "r s"),
    ("f", "a"),
    ("block-d", "j"),
    ("block-e", "j"),
    ("telescope-lhs", "r s"),
    ("telescope-rhs", "r s"),
    ("odd-swap-lhs", ""),
    ("odd-swap-rhs", ""),
    ("pochhammer", "c d"),
];

impl SeriesSpec {
    pub fn parse(name: &str, params: &Params) -> Result<Self> {
        let a = || to_u32("a", params.positive("a")?);
        let r = || to_usize("r", params.positive("r")?);
        let s = || to_usize("s", params.positive("s")?);
        let spec = match name {
            "zero" => SeriesSpec::Zero,
            "base-double" => SeriesSpec::BaseDouble,
            "single-rhs" => SeriesSpec::SingleRhs,
            "sigma-gf" => SeriesSpec::SigmaGf {
                k: to_u32("k", params.get("k").unwrap_or(1))?,
                stride: to_usize("stride", params.positive_or("stride", 1)?)?,
            },
            "dyadic-double" => SeriesSpec::DyadicDouble { a: a()? },
            "base-double-dilated" => SeriesSpec::DilatedBaseDouble { a: a()? },
            "conj2-lhs" => SeriesSpec::Conj2Lhs,
            "conj2-rhs" => SeriesSpec::Conj2Rhs,
            "y" => SeriesSpec::Y,
            "ct-rhs" => SeriesSpec::CtRhs,
            "e2" => SeriesSpec::E2,
            "e2-double" => SeriesSpec::E2Double,
            "lemma21-lhs" => SeriesSpec::Lemma21Lhs,
            "lemma21-rhs" => SeriesSpec::Lemma21Rhs,
            "lemma22-lhs" => SeriesSpec::Lemma22Lhs { r: r()?, s: s()? },
            "lemma22-rhs" => SeriesSpec::Lemma22Rhs { r: r()?, s: s()? },
            "f" => SeriesSpec::F { a: a()? },
            "block-d" => SeriesSpec::BlockD {
                j: to_usize("j", params.positive("j")?)?,
            },
            "block-e" => SeriesSpec::BlockE {
                j: to_usize("j", params.positive("j")?)?,
            },
            "telescope-lhs" => SeriesSpec::TelescopeLhs { r: r()?, s: s()? },
            "telescope-rhs" => SeriesSpec::TelescopeRhs { r: r()?, s: s()? },
            "odd-swap-lhs" => SeriesSpec::OddSwapLhs,
            "odd-swap-rhs" => SeriesSpec::OddSwapRhs,
            "pochhammer" => SeriesSpec::Pochhammer {
                c: to_usize("c", params.positive("c")?)?,
                d: to_usize("d", params.positive("d")?)?,
            },
            other => return Err(Error::UnknownId(other.to_string())),
        };
        Ok(spec)
    }

    pub fn build(&self, order: usize) -> Result<Series> {
        use SeriesSpec::*;
        match *self {
            Zero => Series::zero(order),
            BaseDouble => base_double(order),
            SingleRhs => single_rhs(order),
            SigmaGf { k, stride } => sigma_gf(k, stride, order),
            DyadicDouble { a } => dyadic_double(a, order),
            DilatedBaseDouble { a } => {
                require_positive("a", a.into())?;
                check_order(order)?;
                match pow2(a - 1) {
                    Some(delta) => base_double(order.div_ceil(delta))?.dilate(delta, order),
                    // only the constant term survives, and it is zero
                    None => Series::zero(order),
                }
            }
            Conj2Lhs => conj2_lhs(order),
            Conj2Rhs => conj2_rhs(order),
            Y => y_series(order),
            CtRhs => ct_rhs(order),
            E2 => e2(order),
            E2Double => e2_double(order),
            Lemma21Lhs => lemma21_lhs(order),
            Lemma21Rhs => lemma21_rhs(order),
            Lemma22Lhs { r, s } => lemma22_lhs(r, s, order),
            Lemma22Rhs { r, s } => lemma22_rhs(r, s, order),
            F { a } => f_series(a, order),
            BlockD { j } => block_d(j, order),
            BlockE { j } => block_e(j, order),
            TelescopeLhs { r, s } => telescope_lhs(r, s, order),
            TelescopeRhs { r, s } => telescope_rhs(r, s, order),
            OddSwapLhs => odd_swap_lhs(order),
            OddSwapRhs => odd_swap_rhs(order),
            Pochhammer { c, d } => Series::pochhammer_inf(c, d, order),
        }
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SeriesSpec::*;
        match self {
            Zero => write!(f, "zero"),
            BaseDouble => write!(f, "base-double"),
            SingleRhs => write!(f, "single-rhs"),
            SigmaGf { k, stride } => write!(f, "sigma-gf[k={k},stride={stride}]"),
            DyadicDouble { a } => write!(f, "dyadic-double[a={a}]"),
            DilatedBaseDouble { a } => write!(f, "base-double-dilated[a={a}]"),
            Conj2Lhs => write!(f, "conj2-lhs"),
            Conj2Rhs => write!(f, "conj2-rhs"),
            Y => write!(f, "y"),
            CtRhs => write!(f, "ct-rhs"),
            E2 => write!(f, "e2"),
            E2Double => write!(f, "e2-double"),
            Lemma21Lhs => write!(f, "lemma21-lhs"),
            Lemma21Rhs => write!(f, "lemma21-rhs"),
            Lemma22Lhs { r, s } => write!(f, "lemma22-lhs[r={r},s={s}]"),
            Lemma22Rhs { r, s } => write!(f, "lemma22-rhs[r={r},s={s}]"),
            F { a } => write!(f, "f[a={a}]"),
            BlockD { j } => write!(f, "block-d[j={j}]"),
            BlockE { j } => write!(f, "block-e[j={j}]"),
            TelescopeLhs { r, s } => write!(f, "telescope-lhs[r={r},s={s}]"),
            TelescopeRhs { r, s } => write!(f, "telescope-rhs[r={r},s={s}]"),
            OddSwapLhs => write!(f, "odd-swap-lhs"),
            OddSwapRhs => write!(f, "odd-swap-rhs"),
            Pochhammer { c, d } => write!(f, "pochhammer[c={c},d={d}]"),
        }
    }
}
