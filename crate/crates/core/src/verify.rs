//! Identity registry and verification engine.
//!
//! A case pairs a left-hand series with a right-hand target and a
//! [`CompareMode`] that says which exponents are checked. Subsequence claims
//! live in the mode, so builders always produce whole series.

use std::borrow::Cow;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::builders::{Params, SeriesSpec};
use crate::divisor::{sigma_sieve, SigmaTable};
use crate::error::{Error, Result};
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompareMode {
    /// Every exponent.
    FullEquality,
    /// Exponents divisible by the stride, including 0.
    StrideEquality(usize),
    /// Coefficients at positive multiples of the stride are zero.
    ZeroStride(usize),
    /// Coefficients at even exponents are zero.
    EvenZero,
    /// Coefficients at odd exponents are zero.
    OddZero,
    /// Coefficient at `n*stride` equals `table[n]` for `n >= 1`.
    StrideVsTable(usize),
}

impl fmt::Display for CompareMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompareMode::FullEquality => write!(f, "full"),
            CompareMode::StrideEquality(s) => write!(f, "stride({s})"),
            CompareMode::ZeroStride(s) => write!(f, "zero-stride({s})"),
            CompareMode::EvenZero => write!(f, "even-zero"),
            CompareMode::OddZero => write!(f, "odd-zero"),
            CompareMode::StrideVsTable(s) => write!(f, "stride-vs-table({s})"),
        }
    }
}

impl CompareMode {
    fn stride(&self) -> Option<usize> {
        match *self {
            CompareMode::StrideEquality(s)
            | CompareMode::ZeroStride(s)
            | CompareMode::StrideVsTable(s) => Some(s),
            _ => None,
        }
    }

    /// Exponents below `order` that this mode checks, ascending.
    pub fn exponents(&self, order: usize) -> Box<dyn Iterator<Item = usize>> {
        match *self {
            CompareMode::FullEquality => Box::new(0..order),
            CompareMode::StrideEquality(s) => Box::new((0..order).step_by(s)),
            CompareMode::ZeroStride(s) | CompareMode::StrideVsTable(s) => {
                Box::new((s..order).step_by(s))
            }
            CompareMode::EvenZero => Box::new((0..order).step_by(2)),
            CompareMode::OddZero => Box::new((1..order).step_by(2)),
        }
    }
}

/// What the left-hand side is compared against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rhs {
    Series(SeriesSpec),
    /// `sigma_k`, sieved on demand up to the largest index the order needs.
    Sigma {
        k: u32,
    },
    /// A precomputed table; must cover every index the order needs.
    Table(Arc<SigmaTable>),
    /// The zero-coefficient modes need no right-hand side.
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub id: String,
    pub description: String,
    pub lhs: SeriesSpec,
    pub rhs: Rhs,
    pub mode: CompareMode,
    /// The claim being checked, written out as a formula.
    pub anchor: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub id: String,
    pub order: usize,
    pub pass: bool,
    pub first_mismatch: Option<Mismatch>,
    /// Number of coefficients compared.
    pub terms: usize,
    pub elapsed: Duration,
}

impl VerifyReport {
    /// Equality ignoring `elapsed`.
    pub fn same_outcome(&self, other: &VerifyReport) -> bool {
        self.id == other.id
            && self.order == other.order
            && self.pass == other.pass
            && self.first_mismatch == other.first_mismatch
            && self.terms == other.terms
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MismatchRecord {
    pub e: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Wire form of a [`VerifyReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub id: String,
    pub order: usize,
    pub pass: bool,
    pub first_mismatch: Option<MismatchRecord>,
    pub terms: usize,
    pub elapsed_ms: f64,
}

impl From<&VerifyReport> for ReportRecord {
    fn from(r: &VerifyReport) -> Self {
        ReportRecord {
            id: r.id.clone(),
            order: r.order,
            pass: r.pass,
            first_mismatch: r.first_mismatch.as_ref().map(|m| MismatchRecord {
                e: m.exponent,
                lhs: m.lhs.to_string(),
                rhs: m.rhs.to_string(),
            }),
            terms: r.terms,
            elapsed_ms: r.elapsed.as_micros() as f64 / 1e3,
        }
    }
}

impl TryFrom<ReportRecord> for VerifyReport {
    type Error = Error;

    fn try_from(r: ReportRecord) -> Result<Self> {
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| Error::Config(format!("`{s}` is not an integer")))
        };
        let first_mismatch = match r.first_mismatch {
            Some(m) => Some(Mismatch {
                exponent: m.e,
                lhs: parse(&m.lhs)?,
                rhs: parse(&m.rhs)?,
            }),
            None => None,
        };
        Ok(VerifyReport {
            id: r.id,
            order: r.order,
            pass: r.pass,
            first_mismatch,
            terms: r.terms,
            elapsed: Duration::from_secs_f64(r.elapsed_ms.max(0.0) / 1e3),
        })
    }
}

/// Fault injection: add one to a coefficient on either side before comparing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub perturb_lhs: Option<usize>,
    pub perturb_rhs: Option<usize>,
}

fn case(
    id: impl Into<String>,
    description: impl Into<String>,
    lhs: SeriesSpec,
    rhs: Rhs,
    mode: CompareMode,
    anchor: impl Into<String>,
) -> IdentityCase {
    IdentityCase {
        id: id.into(),
        description: description.into(),
        lhs,
        rhs,
        mode,
        anchor: anchor.into(),
    }
}

const BASE_DOUBLE: &str = "sum_{m,k>=1} q^{2mk}/((1+q^k)(1-q^{2m-1}))";

fn thm_main(a: u32) -> IdentityCase {
    let stride = 1usize << a;
    case(
        format!("thm-main-a{a}"),
        format!("[q^(N*2^{a})] of the dyadic double Lambert series is sigma_1(N)"),
        SeriesSpec::DyadicDouble { a },
        Rhs::Sigma { k: 1 },
        CompareMode::StrideVsTable(stride),
        "[q^{N 2^a}] sum_{m,k>=1} q^{mk 2^a}/((1+q^{k 2^{a-1}})(1-q^{2m-1})) = sigma_1(N)",
    )
}

fn lem22(r: usize, s: usize) -> IdentityCase {
    case(
        format!("lem22-r{r}s{s}"),
        format!("odd-index tail sum swap with r={r}, s={s}"),
        SeriesSpec::Lemma22Lhs { r, s },
        Rhs::Series(SeriesSpec::Lemma22Rhs { r, s }),
        CompareMode::FullEquality,
        "sum_{n>=1} q^{(2n-1)s}/(1-q^{(2n-1)r}) sum_{m>=n+1} q^{(2m-1)r}/(1-q^{(2m-1)r}) \
         = sum_{m>=1} q^{2rm}/(1-q^{2rm}) sum_{n>=m} q^{rn+s}/(1-q^{2rn+2s})",
    )
}

fn f_stride(a: u32) -> IdentityCase {
    case(
        format!("f-stride-a{a}"),
        format!("F({a}) vanishes at every exponent divisible by 2^{a}"),
        SeriesSpec::F { a },
        Rhs::Zero,
        CompareMode::ZeroStride(1 << a),
        "[q^{t 2^a}] sum_{m,n>=1} (q^{mn 2^a+2m-1} - q^{mn 2^a+n 2^{a-1}})\
         /((1-q^{n 2^a})(1-q^{2m-1})) = 0",
    )
}

fn telescope(r: usize, s: usize) -> IdentityCase {
    case(
        format!("telescope-r{r}s{s}"),
        format!("telescoping block identity with r={r}, s={s}"),
        SeriesSpec::TelescopeLhs { r, s },
        Rhs::Series(SeriesSpec::TelescopeRhs { r, s }),
        CompareMode::FullEquality,
        "D_r D_{r+s} = E_r D_s - D_s E_{r+s}, D_j = q^j/(1-q^{2j}), E_j = q^{2j}/(1-q^{2j})",
    )
}

fn dyadic_reduction(a: u32) -> IdentityCase {
    case(
        format!("dyadic-reduction-a{a}"),
        format!("dyadic series at n*2^{a} matches the base series at 2n under x = q^(2^({a}-1))"),
        SeriesSpec::DyadicDouble { a },
        Rhs::Series(SeriesSpec::DilatedBaseDouble { a }),
        CompareMode::StrideEquality(1 << a),
        "[q^{N 2^a}] sum q^{mk 2^a}/((1+q^{k 2^{a-1}})(1-q^{2m-1})) \
         = [x^{2N}] sum x^{2mk}/((1+x^k)(1-x^{2m-1})), x = q^{2^{a-1}}",
    )
}

/// The fixed catalogue of identities, in a stable order.
pub fn registry() -> Vec<IdentityCase> {
    let mut cases = vec![
        case(
            "thm-base",
            "double Lambert series equals sum q^{2n}/(1-q^{2n})^2",
            SeriesSpec::BaseDouble,
            Rhs::Series(SeriesSpec::SingleRhs),
            CompareMode::FullEquality,
            format!("{BASE_DOUBLE} = sum_{{n>=1}} q^{{2n}}/(1-q^{{2n}})^2"),
        ),
        case(
            "thm-base-sigma",
            "sum q^{2n}/(1-q^{2n})^2 is the sigma_1 generating function in q^2",
            SeriesSpec::SingleRhs,
            Rhs::Series(SeriesSpec::SigmaGf { k: 1, stride: 2 }),
            CompareMode::FullEquality,
            "sum_{n>=1} q^{2n}/(1-q^{2n})^2 = sum_{N>=1} sigma_1(N) q^{2N}",
        ),
    ];
    cases.extend((1..=5).map(thm_main));
    cases.extend([
        case(
            "conj2",
            "even-exponent coefficients of two odd-denominator series agree",
            SeriesSpec::Conj2Lhs,
            Rhs::Series(SeriesSpec::Conj2Rhs),
            CompareMode::StrideEquality(2),
            "[q^{2r}] sum_{m,n>=1} q^{2mn}/((1+q^{2n-1})(1-q^{2m-1})) \
             = [q^{2r}] sum_{n>=1} (n-1) q^n/(1+q^{2n-1})",
        ),
        case(
            "y-odd",
            "Y(q) is an odd function of q",
            SeriesSpec::Y,
            Rhs::Zero,
            CompareMode::EvenZero,
            "Y(q) = sum_{m,n>=1} (-q)^{2mn+m}/((1+q^n)(1-q^{2m-1})) has only odd powers",
        ),
        case(
            "ct-identity",
            "Y(q) as an eta-quotient times a Lambert series",
            SeriesSpec::Y,
            Rhs::Series(SeriesSpec::CtRhs),
            CompareMode::FullEquality,
            "Y(q) = -q (q^4;q^4)^4/(q^2;q^2)^2 sum_{k>=1} q^{2k}/(1+q^{2k})",
        ),
        case(
            "cor-e2",
            "E_2 through the double Lambert series",
            SeriesSpec::E2,
            Rhs::Series(SeriesSpec::E2Double),
            CompareMode::FullEquality,
            format!("1 - 24 sum_{{n>=1}} sigma_1(n) q^{{2n}} = 1 - 24 {BASE_DOUBLE}"),
        ),
        case(
            "lem21",
            "odd/even tail sum swap",
            SeriesSpec::Lemma21Lhs,
            Rhs::Series(SeriesSpec::Lemma21Rhs),
            CompareMode::FullEquality,
            "sum_{m>=1} q^{2m-1}/(1-q^{2m-1}) sum_{n>=m} q^{2n}/(1-q^{2n}) \
             = sum_{m>=1} 1/(1-q^{2m-1}) sum_{n>=m+1} q^{2n-1}/(1-q^{2n-1})",
        ),
    ]);
    for r in 1..=6 {
        cases.extend((1..=6).map(|s| lem22(r, s)));
    }
    cases.push(case(
        "f-zero-a1",
        "F(1) vanishes identically",
        SeriesSpec::F { a: 1 },
        Rhs::Series(SeriesSpec::Zero),
        CompareMode::FullEquality,
        "sum_{m,n>=1} (q^{2mn+2m-1} - q^{2mn+n})/((1-q^{2n})(1-q^{2m-1})) = 0",
    ));
    cases.extend((2..=4).map(f_stride));
    for r in 1..=12 {
        cases.extend((1..=12).map(|s| telescope(r, s)));
    }
    cases.push(case(
        "odd-swap",
        "two expansions of the odd-divisor Lambert series",
        SeriesSpec::OddSwapLhs,
        Rhs::Series(SeriesSpec::OddSwapRhs),
        CompareMode::FullEquality,
        "sum_{m>=1} q^{2m-1}/(1-q^{2m-1}) = sum_{m>=1} q^m/(1-q^{2m})",
    ));
    cases.extend((2..=3).map(dyadic_reduction));
    cases.push(case(
        "base-parity",
        "the double Lambert series has no odd powers",
        SeriesSpec::BaseDouble,
        Rhs::Zero,
        CompareMode::OddZero,
        format!("[q^{{2n+1}}] {BASE_DOUBLE} = 0"),
    ));
    cases
}

/// Resolves an identifier. Exact registry ids win; otherwise parametrised
/// families (`thm-main`, `lem22`, `f-stride`, `telescope`,
/// `dyadic-reduction`) take their indices from `params`.
pub fn find_case(id: &str, params: &Params) -> Result<IdentityCase> {
    if let Some(c) = registry().into_iter().find(|c| c.id == id) {
        return Ok(c);
    }
    let positive = |key: &str| -> Result<u64> {
        match params.get(key) {
            Some(0) => Err(Error::Config(format!("parameter {key} must be at least 1"))),
            Some(v) => Ok(v),
            None => Err(Error::Config(format!("identity {id} needs {key}="))),
        }
    };
    let exponent = |key: &str| -> Result<u32> {
        let v = positive(key)?;
        // 2^a must stay well inside usize
        if v > 40 {
            return Err(Error::Config(format!("{key}={v} is too large")));
        }
        Ok(v as u32)
    };
    let index = |key: &str| -> Result<usize> {
        let v = positive(key)?;
        usize::try_from(v).map_err(|_| Error::Config(format!("{key}={v} is too large")))
    };
    match id {
        "thm-main" => Ok(thm_main(exponent("a")?)),
        "lem22" => Ok(lem22(index("r")?, index("s")?)),
        "f-stride" => Ok(f_stride(exponent("a")?)),
        "telescope" => Ok(telescope(index("r")?, index("s")?)),
        "dyadic-reduction" => Ok(dyadic_reduction(exponent("a")?)),
        _ => Err(Error::UnknownId(id.to_string())),
    }
}

/// All exponents where `lhs` and `rhs` differ, ascending.
pub fn diff(lhs: &Series, rhs: &Series) -> Result<Vec<(usize, BigInt, BigInt)>> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch {
            left: lhs.order(),
            right: rhs.order(),
        });
    }
    Ok(lhs
        .coeffs()
        .iter()
        .zip(rhs.coeffs())
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(e, (a, b))| (e, a.clone(), b.clone()))
        .collect())
}

/// Right-hand values resolved for one order.
enum Expected {
    Series(Series),
    Table(Arc<SigmaTable>, usize),
    Zero,
}

impl Expected {
    fn at(&self, e: usize) -> Cow<'_, BigInt> {
        match self {
            Expected::Series(s) => Cow::Borrowed(&s.coeffs()[e]),
            // exponents are positive multiples of the stride and the table
            // covers them all (checked in `check_config`)
            Expected::Table(t, stride) => {
                Cow::Borrowed(t.get(e / stride).expect("table covers order"))
            }
            Expected::Zero => Cow::Owned(BigInt::zero()),
        }
    }
}

fn check_config(case: &IdentityCase, order: usize) -> Result<()> {
    if order < 2 {
        return Err(Error::Config(format!(
            "order must be at least 2, got {order}"
        )));
    }
    if case.mode.stride() == Some(0) {
        return Err(Error::Config(format!(
            "{}: stride must be positive",
            case.id
        )));
    }
    let ok = matches!(
        (&case.mode, &case.rhs),
        (
            CompareMode::FullEquality | CompareMode::StrideEquality(_),
            Rhs::Series(_)
        ) | (
            CompareMode::StrideVsTable(_),
            Rhs::Sigma { .. } | Rhs::Table(_)
        ) | (
            CompareMode::ZeroStride(_) | CompareMode::EvenZero | CompareMode::OddZero,
            Rhs::Zero
        )
    );
    if !ok {
        return Err(Error::Config(format!(
            "{}: mode {} does not fit its right-hand side",
            case.id, case.mode
        )));
    }
    if let (CompareMode::StrideVsTable(stride), Rhs::Table(t)) = (&case.mode, &case.rhs) {
        let needed = (order - 1) / stride;
        if t.limit() < needed {
            return Err(Error::Config(format!(
                "{}: table stops at n = {}, order {order} with stride {stride} needs n = {needed}",
                case.id,
                t.limit()
            )));
        }
    }
    Ok(())
}

fn build_expected(case: &IdentityCase, order: usize) -> Result<Expected> {
    Ok(match (&case.rhs, &case.mode) {
        (Rhs::Series(spec), _) => Expected::Series(spec.build(order)?),
        (Rhs::Sigma { k }, CompareMode::StrideVsTable(stride)) => {
            Expected::Table(Arc::new(sigma_sieve(*k, (order - 1) / stride)), *stride)
        }
        (Rhs::Table(t), CompareMode::StrideVsTable(stride)) => Expected::Table(t.clone(), *stride),
        _ => Expected::Zero,
    })
}

pub fn verify(case: &IdentityCase, order: usize) -> Result<VerifyReport> {
    verify_with(case, order, &VerifyOptions::default())
}

pub fn verify_with(
    case: &IdentityCase,
    order: usize,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let start = Instant::now();
    check_config(case, order)?;
    let (lhs, expected) = rayon::join(|| case.lhs.build(order), || build_expected(case, order));
    let (lhs, expected) = (lhs?, expected?);

    let mut terms = 0;
    let mut first_mismatch = None;
    for e in case.mode.exponents(order) {
        terms += 1;
        let mut l = Cow::Borrowed(&lhs.coeffs()[e]);
        let mut r = expected.at(e);
        if opts.perturb_lhs == Some(e) {
            *l.to_mut() += 1;
        }
        if opts.perturb_rhs == Some(e) {
            *r.to_mut() += 1;
        }
        if l != r {
            first_mismatch = Some(Mismatch {
                exponent: e,
                lhs: l.into_owned(),
                rhs: r.into_owned(),
            });
            break;
        }
    }
    Ok(VerifyReport {
        id: case.id.clone(),
        order,
        pass: first_mismatch.is_none(),
        first_mismatch,
        terms,
        elapsed: start.elapsed(),
    })
}

/// Runs every registry case. Results follow registry order; a failing case
/// does not stop the others.
pub fn verify_all(order: usize) -> Vec<Result<VerifyReport>> {
    verify_cases(&registry(), order)
}

pub fn verify_cases(cases: &[IdentityCase], order: usize) -> Vec<Result<VerifyReport>> {
    cases.par_iter().map(|c| verify(c, order)).collect()
}
