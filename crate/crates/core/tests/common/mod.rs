//! Brute-force reference expander shared by the integration tests.
//!
//! Deliberately naive and independent of the library: index tuples are
//! enumerated over generous ranges, every `1/(1 - s*q^p)` is an explicit
//! loop, and coefficients are `i128` with overflow checks. Only the
//! `SeriesSpec` enum is taken from the crate, to name what to expand.

#![allow(dead_code)]

use num_bigint::BigInt;
use qlambert::builders::SeriesSpec;
use qlambert::Series;

/// `coeff * q^exp / prod (1 - sign*q^period)`.
pub struct Term {
    pub coeff: i128,
    pub exp: usize,
    pub geoms: Vec<(i128, usize)>,
}

pub fn term(coeff: i128, exp: usize, geoms: &[(i128, usize)]) -> Term {
    Term {
        coeff,
        exp,
        geoms: geoms.to_vec(),
    }
}

pub fn expand(order: usize, terms: impl IntoIterator<Item = Term>) -> Vec<i128> {
    let mut out = vec![0i128; order];
    for t in terms {
        walk(&mut out, t.coeff, t.exp, &t.geoms);
    }
    out
}

fn walk(out: &mut [i128], c: i128, e: usize, geoms: &[(i128, usize)]) {
    if e >= out.len() {
        return;
    }
    match geoms.split_first() {
        None => out[e] = out[e].checked_add(c).expect("oracle overflow"),
        Some((&(sign, p), rest)) => {
            let (mut c, mut e) = (c, e);
            while e < out.len() {
                walk(out, c, e, rest);
                c *= sign;
                e += p;
            }
        }
    }
}

/// Multiply by `1 - sign*q^p`.
pub fn times_binomial(v: &[i128], sign: i128, p: usize) -> Vec<i128> {
    let mut out = v.to_vec();
    for e in p..v.len() {
        out[e] -= sign * v[e - p];
    }
    out
}

/// Multiply by `1/(1 - sign*q^p)` with an explicit sum over `t`.
pub fn times_geometric(v: &[i128], sign: i128, p: usize) -> Vec<i128> {
    let mut out = vec![0i128; v.len()];
    for (e, slot) in out.iter_mut().enumerate() {
        let mut w = 1i128;
        let mut t = 0;
        while t * p <= e {
            *slot += w * v[e - t * p];
            w *= sign;
            t += 1;
        }
    }
    out
}

pub fn naive_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let n = a.len();
    let mut out = vec![0i128; n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

pub fn naive_sigma(k: u32, n: usize) -> i128 {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| (d as i128).pow(k))
        .sum()
}

/// Reference expansion of a named series from its defining sum or product.
pub fn oracle(spec: &SeriesSpec, order: usize) -> Vec<i128> {
    use SeriesSpec::*;
    let n = order;
    let mut ts = Vec::new();
    match *spec {
        Zero => {}
        BaseDouble => return oracle(&DyadicDouble { a: 1 }, n),
        SingleRhs => {
            for h in 1..n {
                ts.push(term(1, 2 * h, &[(1, 2 * h), (1, 2 * h)]));
            }
        }
        SigmaGf { k, stride } => {
            for m in 1..n {
                ts.push(term(naive_sigma(k, m), stride * m, &[]));
            }
        }
        DyadicDouble { a } => {
            let (full, half) = (1usize << a, 1usize << (a - 1));
            for m in 1..n {
                for k in 1..n {
                    ts.push(term(1, m * k * full, &[(-1, k * half), (1, 2 * m - 1)]));
                }
            }
        }
        DilatedBaseDouble { a } => {
            let d = 1usize << (a - 1);
            for m in 1..n {
                for k in 1..n {
                    ts.push(term(1, 2 * m * k * d, &[(-1, k * d), (1, (2 * m - 1) * d)]));
                }
            }
        }
        Conj2Lhs => {
            for m in 1..n {
                for k in 1..n {
                    ts.push(term(1, 2 * m * k, &[(-1, 2 * k - 1), (1, 2 * m - 1)]));
                }
            }
        }
        Conj2Rhs => {
            for k in 1..n {
                ts.push(term(k as i128 - 1, k, &[(-1, 2 * k - 1)]));
            }
        }
        Y => {
            for m in 1..n {
                for k in 1..n {
                    let sign = if m % 2 == 0 { 1 } else { -1 };
                    ts.push(term(sign, 2 * m * k + m, &[(-1, k), (1, 2 * m - 1)]));
                }
            }
        }
        CtRhs => {
            for k in 1..n {
                ts.push(term(1, 2 * k, &[(-1, 2 * k)]));
            }
            let mut v = expand(n, ts);
            for j in (4..n).step_by(4) {
                for _ in 0..4 {
                    v = times_binomial(&v, 1, j);
                }
            }
            for j in (2..n).step_by(2) {
                v = times_geometric(&v, 1, j);
                v = times_geometric(&v, 1, j);
            }
            let mut out = vec![0i128; n];
            for e in 1..n {
                out[e] = -v[e - 1];
            }
            return out;
        }
        E2 | E2Double => {
            let inner = if *spec == E2 {
                SigmaGf { k: 1, stride: 2 }
            } else {
                BaseDouble
            };
            let mut v: Vec<i128> = oracle(&inner, n).iter().map(|c| -24 * c).collect();
            v[0] += 1;
            return v;
        }
        Lemma21Lhs => {
            for m in 1..n {
                for k in m..n {
                    ts.push(term(1, 2 * m - 1 + 2 * k, &[(1, 2 * m - 1), (1, 2 * k)]));
                }
            }
        }
        Lemma21Rhs => {
            for m in 1..n {
                for k in m + 1..n {
                    ts.push(term(1, 2 * k - 1, &[(1, 2 * m - 1), (1, 2 * k - 1)]));
                }
            }
        }
        Lemma22Lhs { r, s } => {
            for i in 1..n {
                for m in i + 1..n {
                    let e = (2 * i - 1) * s + (2 * m - 1) * r;
                    ts.push(term(1, e, &[(1, (2 * i - 1) * r), (1, (2 * m - 1) * r)]));
                }
            }
        }
        Lemma22Rhs { r, s } => {
            for m in 1..n {
                for i in m..n {
                    let e = 2 * r * m + r * i + s;
                    ts.push(term(1, e, &[(1, 2 * r * m), (1, 2 * r * i + 2 * s)]));
                }
            }
        }
        F { a } => {
            let (full, half) = (1usize << a, 1usize << (a - 1));
            for m in 1..n {
                for k in 1..n {
                    let g = [(1, k * full), (1, 2 * m - 1)];
                    ts.push(term(1, m * k * full + 2 * m - 1, &g));
                    ts.push(term(-1, m * k * full + k * half, &g));
                }
            }
        }
        BlockD { j } => ts.push(term(1, j, &[(1, 2 * j)])),
        BlockE { j } => ts.push(term(1, 2 * j, &[(1, 2 * j)])),
        TelescopeLhs { r, s } => {
            ts.push(term(1, 2 * r + s, &[(1, 2 * r), (1, 2 * (r + s))]));
        }
        TelescopeRhs { r, s } => {
            ts.push(term(1, 2 * r + s, &[(1, 2 * r), (1, 2 * s)]));
            ts.push(term(-1, s + 2 * (r + s), &[(1, 2 * s), (1, 2 * (r + s))]));
        }
        OddSwapLhs => {
            for m in 1..n {
                ts.push(term(1, 2 * m - 1, &[(1, 2 * m - 1)]));
            }
        }
        OddSwapRhs => {
            for m in 1..n {
                ts.push(term(1, m, &[(1, 2 * m)]));
            }
        }
        Pochhammer { c, d } => {
            let mut v = vec![0i128; n];
            v[0] = 1;
            let mut p = c;
            while p < n {
                v = times_binomial(&v, 1, p);
                p += d;
            }
            return v;
        }
    }
    expand(n, ts)
}

pub fn as_i128(s: &Series) -> Vec<i128> {
    s.coeffs()
        .iter()
        .map(|c| i128::try_from(c).expect("coefficient fits i128"))
        .collect()
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
