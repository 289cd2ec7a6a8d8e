//! Minimal linear recurrences for power-sum sequences, and the annihilators
//! that bound their length.
//!
//! Sequences are indexed from `n = 1`. A recurrence with start `n0` and
//! length `ℓ` uses the tail `S_n0, S_n0+1, ...`, so the identity
//!
//! ```text
//! S_n = a_1 S_{n-1} + ... + a_ℓ S_{n-ℓ} + b + c(-1)^n
//! ```
//!
//! is asserted for every `n ≥ n0 + ℓ`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{charpoly, solve, IntPolynomial, RationalMatrix};
use crate::periodic::formulas;
use crate::poly::{monomial_name, HomogPoly, SymQuotient};
use crate::stern::power_sum_sequence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearRecurrence {
    /// `a_1 .. a_ℓ`.
    #[serde(serialize_with = "crate::ser::rationals")]
    pub coeffs: Vec<BigRational>,
    /// First sequence index the recurrence draws on.
    pub start: u64,
    #[serde(serialize_with = "crate::ser::rational")]
    pub affine: BigRational,
    #[serde(serialize_with = "crate::ser::rational")]
    pub alternating: BigRational,
}

impl LinearRecurrence {
    pub fn homogeneous(coeffs: Vec<BigRational>, start: u64) -> Self {
        LinearRecurrence {
            coeffs,
            start,
            affine: BigRational::zero(),
            alternating: BigRational::zero(),
        }
    }

    pub fn from_i64(coeffs: &[i64], start: u64) -> Self {
        Self::homogeneous(coeffs.iter().map(|&c| int(c)).collect(), start)
    }

    pub fn length(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.affine.is_zero() && self.alternating.is_zero()
    }

    /// First index at which the identity is checked.
    pub fn first_checked(&self) -> u64 {
        self.start + self.length() as u64
    }

    /// Right-hand side at index `n` (1-based), given the earlier terms.
    fn predict(&self, seq: &[BigRational], n: usize) -> BigRational {
        let mut acc = &self.affine
            + if n % 2 == 0 {
                self.alternating.clone()
            } else {
                -&self.alternating
            };
        for (j, a) in self.coeffs.iter().enumerate() {
            acc += a * &seq[n - 2 - j];
        }
        acc
    }

    /// The monic characteristic polynomial `x^ℓ − a_1 x^(ℓ−1) − ... − a_ℓ`,
    /// when every coefficient is an integer.
    pub fn characteristic(&self) -> Option<IntPolynomial> {
        let l = self.length();
        let mut c = vec![BigInt::zero(); l + 1];
        c[l] = BigInt::one();
        for (j, a) in self.coeffs.iter().enumerate() {
            if !a.is_integer() {
                return None;
            }
            c[l - 1 - j] = -a.to_integer();
        }
        Some(IntPolynomial::new(c))
    }

    /// Reads a monic polynomial as a recurrence.
    pub fn from_characteristic(p: &IntPolynomial, start: u64) -> Result<Self> {
        if !p.is_monic() {
            return Err(Error::InvalidRange(format!("{p} is not monic")));
        }
        let l = p.degree().unwrap_or(0);
        let coeffs = (1..=l)
            .map(|j| BigRational::from_integer(-p.coeff(l - j)))
            .collect();
        Ok(Self::homogeneous(coeffs, start))
    }
}

impl fmt::Display for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_n =")?;
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: &BigRational, what: &str| -> fmt::Result {
            if c.is_zero() {
                return Ok(());
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, false) => write!(f, " ")?,
                (true, true) => write!(f, " -")?,
                _ => write!(f, " {sign} ")?,
            }
            first = false;
            if what.is_empty() {
                write!(f, "{mag}")
            } else if mag.is_one() {
                write!(f, "{what}")
            } else {
                write!(f, "{mag}·{what}")
            }
        };
        for (j, a) in self.coeffs.iter().enumerate() {
            term(f, a, &format!("S_(n-{})", j + 1))?;
        }
        term(f, &self.affine, "")?;
        term(f, &self.alternating, "(-1)^n")?;
        if first {
            write!(f, " 0")?;
        }
        write!(f, "  (n >= {})", self.first_checked())
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Whether the identity holds at every index from `start + ℓ` to the end of
/// `seq`. A start of 0 refers to an undefined term and never verifies.
pub fn verify_recurrence(seq: &[BigRational], rec: &LinearRecurrence) -> bool {
    if rec.start == 0 {
        return false;
    }
    let first = rec.first_checked() as usize;
    (first..=seq.len()).all(|n| seq[n - 1] == rec.predict(seq, n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Form {
    Homogeneous,
    AffineAlt,
}

impl Form {
    fn extra(self) -> usize {
        match self {
            Form::Homogeneous => 0,
            Form::AffineAlt => 2,
        }
    }
}

/// Equation rows for length `l`: one per `n` in `n0 + l ..= len`, with
/// columns `S_(n-1) .. S_(n-l)` followed by the requested extra columns.
fn system(
    seq: &[BigRational],
    n0: usize,
    l: usize,
    with_b: bool,
    with_c: bool,
) -> (RationalMatrix, Vec<BigRational>) {
    let ns: Vec<usize> = (n0 + l..=seq.len()).collect();
    let cols = l + with_b as usize + with_c as usize;
    let m = RationalMatrix::from_fn(ns.len(), cols, |i, j| {
        let n = ns[i];
        if j < l {
            seq[n - 2 - j].clone()
        } else if (with_b && j == l) || n % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        }
    });
    let rhs = ns.iter().map(|&n| seq[n - 1].clone()).collect();
    (m, rhs)
}

/// Fits length `l`, or `None` when no recurrence of that length and form
/// fits the whole horizon.
fn fit(seq: &[BigRational], n0: usize, l: usize, form: Form) -> Option<LinearRecurrence> {
    let build = |x: Vec<BigRational>, with_b: bool, with_c: bool| {
        let mut it = x.into_iter();
        let coeffs: Vec<BigRational> = it.by_ref().take(l).collect();
        let b = if with_b { it.next().unwrap() } else { BigRational::zero() };
        let c = if with_c { it.next().unwrap() } else { BigRational::zero() };
        LinearRecurrence {
            coeffs,
            start: n0 as u64,
            affine: b,
            alternating: c,
        }
    };
    let attempt = |with_b: bool, with_c: bool| {
        let (m, rhs) = system(seq, n0, l, with_b, with_c);
        solve(&m, &rhs).map(|x| build(x, with_b, with_c))
    };
    match form {
        Form::Homogeneous => attempt(false, false),
        // b is either pinned by the data or can be zero; same for c after b
        Form::AffineAlt => {
            if let Some(no_b) = attempt(false, true) {
                attempt(false, false).or(Some(no_b))
            } else {
                attempt(true, false).or_else(|| attempt(true, true))
            }
        }
    }
}

fn min_fit(seq: &[BigRational], n0: u64, form: Form) -> Result<LinearRecurrence> {
    if n0 == 0 {
        return Err(Error::InvalidRange("start index must be at least 1".into()));
    }
    let n0 = n0 as usize;
    let tail = seq.len().saturating_sub(n0 - 1);
    for l in 0.. {
        // at least two equations beyond the number of unknowns
        let needed_tail = 2 * l + 2 + 2 * form.extra();
        if tail < needed_tail {
            return Err(Error::InsufficientData {
                length: l,
                required: n0 - 1 + needed_tail,
                available: seq.len(),
            });
        }
        if let Some(rec) = fit(seq, n0, l, form) {
            return Ok(rec);
        }
    }
    unreachable!()
}

/// Shortest homogeneous recurrence for the tail of `seq` from index `n0`.
pub fn min_recurrence(seq: &[BigRational], n0: u64) -> Result<LinearRecurrence> {
    min_fit(seq, n0, Form::Homogeneous)
}

/// Shortest recurrence with an affine and an alternating term.
///
/// Among fits of minimal length, `b = 0` is preferred when possible, then
/// `c = 0`; any remaining freedom in the `a_j` is set to zero.
pub fn min_affine_alt_recurrence(seq: &[BigRational], n0: u64) -> Result<LinearRecurrence> {
    min_fit(seq, n0, Form::AffineAlt)
}

/// Shortest linear feedback relation for the whole sequence, over the
/// rationals. Returns `a_1 .. a_ℓ` with `s_k = Σ a_j s_(k-j)` for `k ≥ ℓ`.
pub fn berlekamp_massey(seq: &[BigRational]) -> Vec<BigRational> {
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last = BigRational::one();
    for k in 0..seq.len() {
        let mut d = seq[k].clone();
        for i in 1..=l {
            d += &c[i] * &seq[k - i];
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d / &last;
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] -= &coef * bi;
        }
        if 2 * l <= k {
            l = k + 1 - l;
            b = prev;
            last = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.resize(l + 1, BigRational::zero());
    c.into_iter().skip(1).map(|x| -x).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Homogeneous,
    AffineAlt,
}

/// Predicted maximal recurrence length for degree `r`. For odd `r` both
/// variants share the homogeneous bound.
pub fn corollary_bound(r: u64, variant: Variant) -> Result<u64> {
    if r == 0 {
        return Err(Error::InvalidRange("r must be at least 1".into()));
    }
    let f = if r % 2 == 1 {
        formulas::corollary_odd()
    } else {
        match variant {
            Variant::Homogeneous => formulas::corollary_even(),
            Variant::AffineAlt => formulas::corollary_even_affine(),
        }
    };
    f.eval_count(r)
}

/// An annihilating polynomial for every power-sum sequence of degree `r`,
/// together with the first index it applies from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilator {
    pub poly: IntPolynomial,
    pub start: u64,
}

impl Annihilator {
    pub fn recurrence(&self) -> LinearRecurrence {
        LinearRecurrence::from_characteristic(&self.poly, self.start).expect("monic")
    }
}

/// Odd `r`: `charpoly(Φ_sym) / x^m` with `m = m(Φ_sym, 0)`, valid from
/// index `m + 1`. Even `r`: `g·(x − 1)(x + 1)`, where `g` is
/// `charpoly(Φ_sym)` with every factor `x ∓ 1` removed, valid from index 1.
pub fn shortened_annihilator_with_start(r: u64) -> Result<Annihilator> {
    if r == 0 {
        return Err(Error::InvalidRange("r must be at least 1".into()));
    }
    let sym = SymQuotient::new(r as usize);
    let cp = charpoly(&sym.phi_sym)?;
    if r % 2 == 1 {
        let m = cp.root_multiplicity(&BigRational::zero())?;
        let poly = cp.divide_out(&IntPolynomial::linear(0), m as u32)?;
        Ok(Annihilator {
            poly,
            start: m as u64 + 1,
        })
    } else {
        let mut g = cp.clone();
        for t in [1, -1] {
            let k = g.root_multiplicity(&int(t))?;
            g = g.divide_out(&IntPolynomial::linear(t), k as u32)?;
        }
        let poly = &(&g * &IntPolynomial::linear(1)) * &IntPolynomial::linear(-1);
        Ok(Annihilator { poly, start: 1 })
    }
}

pub fn shortened_annihilator(r: u64) -> Result<IntPolynomial> {
    Ok(shortened_annihilator_with_start(r)?.poly)
}

/// Mining result for one monomial class `[x^a y^(r-a)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinedClass {
    pub a: usize,
    pub monomial: String,
    pub homogeneous: LinearRecurrence,
    /// Even `r` only.
    pub affine_alt: Option<LinearRecurrence>,
    /// Smallest start in `{1, 2, 3}` at which the mined homogeneous
    /// recurrence still verifies, if any.
    pub earliest_start: Option<u64>,
    pub within_bound: bool,
    pub affine_within_bound: Option<bool>,
    /// The shortened annihilator's recurrence verifies on this sequence.
    pub annihilator_verifies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MiningTable {
    pub r: u64,
    pub n_terms: u32,
    pub bound_homogeneous: u64,
    /// Even `r` only.
    pub bound_affine_alt: Option<u64>,
    pub annihilator: String,
    pub annihilator_degree: usize,
    pub annihilator_start: u64,
    pub classes: Vec<MinedClass>,
}

impl MiningTable {
    /// Every length bound holds and the annihilator verifies everywhere.
    pub fn passed(&self) -> bool {
        self.classes.iter().all(|c| {
            c.within_bound && c.affine_within_bound.unwrap_or(true) && c.annihilator_verifies
        })
    }
}

/// Default number of terms mined for degree `r`.
pub fn default_terms(r: u64) -> Result<u32> {
    Ok(2 * corollary_bound(r, Variant::Homogeneous)? as u32 + 8)
}

/// Mines the minimal recurrences of `S_n(x^a y^(r-a))` for each class
/// representative `a = ⌈r/2⌉ ..= r`, fitting from index 2.
pub fn mine_all_monomials(r: u64, n_terms: u32) -> Result<MiningTable> {
    let bound = corollary_bound(r, Variant::Homogeneous)?;
    let needed = 2 * bound as usize + 8;
    if (n_terms as usize) < needed {
        return Err(Error::InsufficientData {
            length: bound as usize,
            required: needed,
            available: n_terms as usize,
        });
    }
    let even = r % 2 == 0;
    let bound_affine = if even {
        Some(corollary_bound(r, Variant::AffineAlt)?)
    } else {
        None
    };
    let ann = shortened_annihilator_with_start(r)?;
    let ann_rec = ann.recurrence();
    let ru = r as usize;
    let classes = (ru.div_ceil(2)..=ru)
        .into_par_iter()
        .map(|a| -> Result<MinedClass> {
            let seq = power_sum_sequence(&HomogPoly::monomial(ru, a), n_terms)?;
            let homogeneous = min_recurrence(&seq, 2)?;
            let earliest_start = (1..=3).find(|&s| {
                let mut trial = homogeneous.clone();
                trial.start = s;
                verify_recurrence(&seq, &trial)
            });
            let affine_alt = if even {
                Some(min_affine_alt_recurrence(&seq, 2)?)
            } else {
                None
            };
            Ok(MinedClass {
                a,
                monomial: monomial_name(a, ru - a),
                within_bound: homogeneous.length() as u64 <= bound,
                affine_within_bound: affine_alt
                    .as_ref()
                    .zip(bound_affine)
                    .map(|(rec, b)| rec.length() as u64 <= b),
                homogeneous,
                affine_alt,
                earliest_start,
                annihilator_verifies: verify_recurrence(&seq, &ann_rec),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MiningTable {
        r,
        n_terms,
        bound_homogeneous: bound,
        bound_affine_alt: bound_affine,
        annihilator: ann.poly.to_string(),
        annihilator_degree: ann.poly.degree().unwrap_or(0),
        annihilator_start: ann.start,
        classes,
    })
}
