//! Rows of Stern's diatomic array and the power sums `S_n(f)`.
//!
//! `S_n(f) = Σ f(s(n,k), s(n,k+1))` over `k = 0 ..= 2^n - 1`, with the
//! boundary entries `s(n,0) = s(n,2^n) = 0`, so the pairs `(0,1)` and `(1,0)`
//! are always included.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{phi_matrix, HomogPoly};

/// Default largest row index the direct method will materialize (2^24 − 1
/// entries).
pub const DEFAULT_ROW_CAP: u32 = 24;

const CHUNK: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Entries {
    Small(Vec<u64>),
    Big(Vec<BigUint>),
}

/// Row `n` of the array: the nonzero entries `s(n,1) ..= s(n,2^n − 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SternRow {
    n: u32,
    entries: Entries,
}

impl SternRow {
    pub fn index(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        match &self.entries {
            Entries::Small(v) => v.len(),
            Entries::Big(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `s(n, k)` for `1 <= k <= 2^n − 1`, zero elsewhere.
    pub fn entry(&self, k: usize) -> BigUint {
        if k == 0 || k > self.len() {
            return BigUint::zero();
        }
        match &self.entries {
            Entries::Small(v) => BigUint::from(v[k - 1]),
            Entries::Big(v) => v[k - 1].clone(),
        }
    }

    pub fn to_vec(&self) -> Vec<BigUint> {
        match &self.entries {
            Entries::Small(v) => v.iter().map(|&x| BigUint::from(x)).collect(),
            Entries::Big(v) => v.clone(),
        }
    }

    /// Machine-word view, when every entry fits.
    pub fn as_u64(&self) -> Option<&[u64]> {
        match &self.entries {
            Entries::Small(v) => Some(v),
            Entries::Big(_) => None,
        }
    }

    pub fn is_palindrome(&self) -> bool {
        match &self.entries {
            Entries::Small(v) => v.iter().eq(v.iter().rev()),
            Entries::Big(v) => v.iter().eq(v.iter().rev()),
        }
    }

    fn next(&self) -> SternRow {
        let entries = match &self.entries {
            Entries::Small(v) => match next_small(v) {
                Some(w) => Entries::Small(w),
                None => Entries::Big(next_big(&v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>())),
            },
            Entries::Big(v) => Entries::Big(next_big(v)),
        };
        SternRow {
            n: self.n + 1,
            entries,
        }
    }
}

fn next_small(v: &[u64]) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(2 * v.len() + 1);
    let mut prev = 0u64;
    for &x in v {
        out.push(prev.checked_add(x)?);
        out.push(x);
        prev = x;
    }
    out.push(prev);
    Some(out)
}

fn next_big(v: &[BigUint]) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(2 * v.len() + 1);
    let zero = BigUint::zero();
    let mut prev = &zero;
    for x in v {
        out.push(prev + x);
        out.push(x.clone());
        prev = x;
    }
    out.push(prev.clone());
    out
}

/// Row `n` with the default cap.
pub fn stern_row(n: u32) -> Result<SternRow> {
    stern_row_with_cap(n, DEFAULT_ROW_CAP)
}

/// Row `n`, generated iteratively from row 1. Fails when `n = 0` or `n > cap`.
pub fn stern_row_with_cap(n: u32, cap: u32) -> Result<SternRow> {
    if n == 0 || n > cap {
        return Err(Error::RowOutOfRange { n, cap });
    }
    let mut row = SternRow {
        n: 1,
        entries: Entries::Small(vec![1]),
    };
    while row.n < n {
        row = row.next();
    }
    Ok(row)
}

/// `Σ_k s_k^a s_{k+1}^(r−a)` over all consecutive pairs of the zero-padded row,
/// for each requested exponent `a`.
fn pair_power_sums(row: &SternRow, r: usize, exps: &[usize]) -> Vec<BigUint> {
    match &row.entries {
        Entries::Small(v) => {
            let padded: Vec<u64> = std::iter::once(0).chain(v.iter().copied()).chain(std::iter::once(0)).collect();
            let pairs = padded.len() - 1;
            let chunks: Vec<Vec<BigUint>> = (0..pairs.div_ceil(CHUNK))
                .into_par_iter()
                .map(|c| {
                    let range = c * CHUNK..((c + 1) * CHUNK).min(pairs);
                    small_chunk(&padded, range.clone(), r, exps).unwrap_or_else(|| {
                        let big: Vec<BigUint> = padded[range.start..=range.end].iter().map(|&x| BigUint::from(x)).collect();
                        big_chunk(&big, 0..range.len(), r, exps)
                    })
                })
                .collect();
            sum_chunks(chunks, exps.len())
        }
        Entries::Big(v) => {
            let mut padded = vec![BigUint::zero()];
            padded.extend(v.iter().cloned());
            padded.push(BigUint::zero());
            let pairs = padded.len() - 1;
            let chunks: Vec<Vec<BigUint>> = (0..pairs.div_ceil(CHUNK))
                .into_par_iter()
                .map(|c| big_chunk(&padded, c * CHUNK..((c + 1) * CHUNK).min(pairs), r, exps))
                .collect();
            sum_chunks(chunks, exps.len())
        }
    }
}

fn sum_chunks(chunks: Vec<Vec<BigUint>>, k: usize) -> Vec<BigUint> {
    chunks.into_iter().fold(vec![BigUint::zero(); k], |mut acc, c| {
        for (a, x) in acc.iter_mut().zip(c) {
            *a += x;
        }
        acc
    })
}

/// Word-sized accumulation; `None` on any overflow.
fn small_chunk(padded: &[u64], range: std::ops::Range<usize>, r: usize, exps: &[usize]) -> Option<Vec<BigUint>> {
    let mut acc = vec![0u128; exps.len()];
    let mut xp = vec![1u128; r + 1];
    let mut yp = vec![1u128; r + 1];
    for k in range {
        let (x, y) = (padded[k] as u128, padded[k + 1] as u128);
        for e in 1..=r {
            xp[e] = xp[e - 1].checked_mul(x)?;
            yp[e] = yp[e - 1].checked_mul(y)?;
        }
        for (slot, &a) in acc.iter_mut().zip(exps) {
            *slot = slot.checked_add(xp[a].checked_mul(yp[r - a])?)?;
        }
    }
    Some(acc.into_iter().map(BigUint::from).collect())
}

fn big_chunk(padded: &[BigUint], range: std::ops::Range<usize>, r: usize, exps: &[usize]) -> Vec<BigUint> {
    let mut acc = vec![BigUint::zero(); exps.len()];
    for k in range {
        let (x, y) = (&padded[k], &padded[k + 1]);
        for (slot, &a) in acc.iter_mut().zip(exps) {
            *slot += num_traits::pow(x.clone(), a) * num_traits::pow(y.clone(), r - a);
        }
    }
    acc
}

/// `S_n(f)` by summing over the materialized row (default cap).
pub fn power_sum_direct(n: u32, f: &HomogPoly) -> Result<BigRational> {
    power_sum_direct_with_cap(n, f, DEFAULT_ROW_CAP)
}

pub fn power_sum_direct_with_cap(n: u32, f: &HomogPoly, cap: u32) -> Result<BigRational> {
    let row = stern_row_with_cap(n, cap)?;
    Ok(power_sum_over_row(&row, f))
}

/// `S_n(f)` for an already generated row `n`.
pub fn power_sum_over_row(row: &SternRow, f: &HomogPoly) -> BigRational {
    let r = f.degree();
    let exps: Vec<usize> = (0..=r).filter(|&a| !f.coeff(a).is_zero()).collect();
    let sums = pair_power_sums(row, r, &exps);
    exps.iter()
        .zip(sums)
        .map(|(&a, t)| f.coeff(a) * BigRational::from_integer(BigInt::from(t)))
        .sum()
}

/// The transfer operator `Φ` on degree-`r` forms, kept as an integer matrix so
/// that repeated application stays in integer arithmetic.
#[derive(Clone, Debug)]
pub struct TransferOperator {
    r: usize,
    phi: Vec<Vec<BigInt>>,
}

impl TransferOperator {
    pub fn new(r: usize) -> Self {
        let phi = phi_matrix(r)
            .to_integer_rows()
            .expect("transfer matrix has integer entries");
        TransferOperator { r, phi }
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    fn check(&self, f: &HomogPoly) -> Result<()> {
        if f.degree() != self.r {
            return Err(Error::DegreeMismatch {
                expected: self.r,
                found: f.degree(),
            });
        }
        Ok(())
    }

    fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.phi
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// `S_n(f) = E(Φ^(n−1) f)` with `E(g) = g(0,1) + g(1,0)`.
    pub fn power_sum(&self, n: u32, f: &HomogPoly) -> Result<BigRational> {
        self.check(f)?;
        if n == 0 {
            return Err(Error::InvalidRange("row index must be at least 1".into()));
        }
        let (mut v, d) = f.integer_numerators();
        for _ in 1..n {
            v = self.apply(&v);
        }
        Ok(BigRational::new(&v[0] + &v[self.r], d))
    }

    /// `[S_1(f), ..., S_{n_max}(f)]`.
    pub fn sequence(&self, f: &HomogPoly, n_max: u32) -> Result<Vec<BigRational>> {
        self.check(f)?;
        if n_max == 0 {
            return Err(Error::InvalidRange("sequence length must be at least 1".into()));
        }
        let (mut v, d) = f.integer_numerators();
        let mut out = Vec::with_capacity(n_max as usize);
        for n in 1..=n_max {
            if n > 1 {
                v = self.apply(&v);
            }
            out.push(BigRational::new(&v[0] + &v[self.r], d.clone()));
        }
        Ok(out)
    }
}

/// `S_n(f)` by iterating `Φ`; no row cap.
pub fn power_sum_fast(n: u32, f: &HomogPoly) -> Result<BigRational> {
    TransferOperator::new(f.degree()).power_sum(n, f)
}

pub fn power_sum_sequence(f: &HomogPoly, n_max: u32) -> Result<Vec<BigRational>> {
    TransferOperator::new(f.degree()).sequence(f, n_max)
}
