//! Univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RationalMatrix;
use crate::error::{Error, Result};

/// Coefficients lowest degree first; no trailing zeros, so the zero
/// polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x - t`.
    pub fn linear(t: i64) -> Self {
        Self::from_i64(&[-t, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Division over the rationals. Errors when the divisor is zero.
    pub fn div_rem_rational(&self, d: &Self) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = BigRational::from_integer(d.leading().unwrap().clone());
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        if rem.len() <= dd {
            return Ok((Vec::new(), rem));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let t = &rem[k + dd] / &lead;
            if t.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[k + j] -= &t * BigRational::from_integer(c.clone());
                }
            }
            quot[k] = t;
        }
        rem.truncate(dd);
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        Ok((quot, rem))
    }

    /// Exact quotient `self / d`, failing unless the remainder is zero and the
    /// quotient has integer coefficients.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem_rational(d)?;
        if !r.is_empty() {
            return Err(Error::InexactDivision(format!("({self}) is not divisible by ({d})")));
        }
        if q.iter().any(|c| !c.is_integer()) {
            return Err(Error::InexactDivision(format!(
                "({self}) / ({d}) has non-integral coefficients"
            )));
        }
        Ok(Self::new(q.into_iter().map(|c| c.to_integer()).collect()))
    }

    /// `self / q^k`, exact.
    pub fn divide_out(&self, q: &Self, k: u32) -> Result<Self> {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.exact_div(q)?;
        }
        Ok(p)
    }

    /// Largest `k` with `(x - root)^k` dividing `self`.
    pub fn root_multiplicity(&self, root: &BigRational) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        // (denom·x − numer) is the primitive integer form of x − root
        let factor = Self::new(vec![-root.numer().clone(), root.denom().clone()]);
        let mut p = self.clone();
        let mut k = 0;
        while p.degree().unwrap_or(0) > 0 && p.eval(root).is_zero() {
            p = p.exact_div(&factor)?;
            k += 1;
        }
        Ok(k)
    }

    /// Pseudo-remainder of `self` by `d`: the remainder of `lc(d)^e · self`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("nonzero divisor");
        let lead = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.pop().unwrap();
            let shift = r.len() - dd;
            for c in r.iter_mut() {
                *c *= lead;
            }
            if !top.is_zero() {
                for (j, c) in d.coeffs[..dd].iter().enumerate() {
                    r[shift + j] -= &top * c;
                }
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Greatest common divisor over Z via the primitive remainder sequence.
    /// The result is primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        let g = self.gcd(other);
        Ok((self * other).exact_div(&g)?.primitive())
    }

    /// True iff `gcd(p, p')` is constant.
    ///
    /// A modular certificate is tried first: if `p mod ℓ` is squarefree over
    /// F_ℓ for a prime ℓ not dividing the leading coefficient, the
    /// discriminant of `p` is nonzero. Only when no prime certifies does the
    /// exact integer gcd run.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(true);
        }
        if CERTIFICATE_PRIMES.iter().any(|&l| squarefree_mod(self, l)) {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Product of the distinct irreducible factors, primitive with positive
    /// leading coefficient.
    ///
    /// Factors `x`, `x - 1` and `x + 1` are split off first because transfer
    /// matrices have high multiplicities there, which keeps the generic gcd
    /// off the hot path.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut rest = self.primitive();
        let mut linear = Self::one();
        for t in [0i64, 1, -1] {
            let root = BigRational::from_integer(t.into());
            let k = rest.root_multiplicity(&root)?;
            if k > 0 {
                rest = rest.divide_out(&Self::linear(t), k as u32)?;
                linear = &linear * &Self::linear(t);
            }
        }
        let rest = if rest.is_squarefree()? {
            rest
        } else {
            rest.exact_div(&rest.gcd(&rest.derivative()))?
        };
        Ok((&linear * &rest).primitive())
    }

    /// `p(M)` for a square matrix, by Horner's rule.
    pub fn eval_matrix(&self, m: &RationalMatrix) -> Result<RationalMatrix> {
        let n = m.require_square()?;
        let mut acc = RationalMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            let c = BigRational::from_integer(c.clone());
            for i in 0..n {
                acc[(i, i)] += &c;
            }
        }
        Ok(acc)
    }

    /// `p(M) v` for an integer matrix given by rows, by Horner's rule on the
    /// vector. Costs `deg p` matrix-vector products.
    pub fn eval_matrix_on_vector(&self, m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
        let n = v.len();
        let mut acc = vec![BigInt::zero(); n];
        for c in self.coeffs.iter().rev() {
            acc = int_mat_vec(m, &acc);
            if !c.is_zero() {
                for (a, x) in acc.iter_mut().zip(v) {
                    if !x.is_zero() {
                        *a += c * x;
                    }
                }
            }
        }
        acc
    }
}

pub(crate) fn int_mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

const CERTIFICATE_PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 1_000_000_007, 998_244_353];

fn mulmod(a: u64, b: u64, l: u64) -> u64 {
    ((a as u128 * b as u128) % l as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, l: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, l);
        }
        a = mulmod(a, a, l);
        e >>= 1;
    }
    r
}

fn reduce_mod(p: &IntPolynomial, l: u64) -> Vec<u64> {
    let lb = BigInt::from(l);
    let mut v: Vec<u64> = p
        .coeffs
        .iter()
        .map(|c| c.mod_floor(&lb).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` by `b` over F_l; `b` nonzero with no trailing zeros.
fn rem_mod(mut a: Vec<u64>, b: &[u64], l: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = powmod(b[db], l - 2, l);
    while a.len() > db {
        let top = mulmod(*a.last().unwrap(), inv, l);
        let shift = a.len() - 1 - db;
        for (j, &c) in b.iter().enumerate() {
            let t = mulmod(top, c, l);
            a[shift + j] = (a[shift + j] + l - t) % l;
        }
        while a.last() == Some(&0) {
            a.pop();
        }
    }
    a
}

fn squarefree_mod(p: &IntPolynomial, l: u64) -> bool {
    let f = reduce_mod(p, l);
    if f.len() != p.coeffs.len() {
        // prime divides the leading coefficient
        return false;
    }
    let df: Vec<u64> = {
        let mut v: Vec<u64> = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % l, l))
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    if df.is_empty() {
        return f.len() <= 1;
    }
    let (mut a, mut b) = (f, df);
    while !b.is_empty() {
        let r = rem_mod(a, &b, l);
        a = b;
        b = r;
    }
    a.len() == 1
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Human-readable form such as `x^2 - 7x`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -7, 1]).to_string(), "x^2 - 7x");
        assert_eq!(p(&[-2, 7, -6, 1]).to_string(), "x^3 - 6x^2 + 7x - 2");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
    }

    #[test]
    fn divide_out_examples() {
        assert_eq!(p(&[0, -7, 1]).divide_out(&p(&[0, 1]), 1).unwrap(), p(&[-7, 1]));
        let q = p(&[-2, 7, -6, 1]);
        assert_eq!(q.divide_out(&p(&[5, 3]), 0).unwrap(), q);
        assert_eq!(q.divide_out(&IntPolynomial::linear(1), 1).unwrap(), p(&[2, -5, 1]));
        assert!(matches!(
            q.divide_out(&IntPolynomial::linear(1), 2),
            Err(Error::InexactDivision(_))
        ));
        // divisible over Q but not over Z
        assert!(p(&[1, 1]).exact_div(&p(&[2])).is_err());
    }

    #[test]
    fn squarefree_examples() {
        assert!(p(&[0, -7, 1]).is_squarefree().unwrap());
        assert!(!p(&[1, -2, 1]).is_squarefree().unwrap());
        assert!(matches!(IntPolynomial::zero().is_squarefree(), Err(Error::ZeroPolynomial)));
        assert!(p(&[5]).is_squarefree().unwrap());
    }

    #[test]
    fn squarefree_part_strips_repeats() {
        // x^3 (x-1)^2 (x+1) (x^2 - 5x + 2)^2
        let q = p(&[2, -5, 1]);
        let f = &(&p(&[0, 0, 0, 1]) * &IntPolynomial::linear(1).pow(2))
            * &(&IntPolynomial::linear(-1) * &q.pow(2));
        let expected = &(&p(&[0, 1]) * &IntPolynomial::linear(1))
            * &(&IntPolynomial::linear(-1) * &q);
        assert_eq!(f.squarefree_part().unwrap(), expected);
    }

    #[test]
    fn root_multiplicities() {
        let f = &IntPolynomial::linear(1) * &p(&[2, -5, 1]);
        let one = BigRational::one();
        assert_eq!(f.root_multiplicity(&one).unwrap(), 1);
        assert_eq!(f.root_multiplicity(&-one).unwrap(), 0);
        let g = &p(&[-1, 2]).pow(3) * &p(&[1, 1]);
        assert_eq!(g.root_multiplicity(&BigRational::new(1.into(), 2.into())).unwrap(), 3);
    }

    #[test]
    fn gcd_and_lcm() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.lcm(&b).unwrap(), &a * &p(&[3, 1]));
        assert_eq!(p(&[4, 2]).gcd(&p(&[6, 3])), p(&[2, 1]));
    }

    #[test]
    fn modular_certificate_rejects_when_prime_hits_leading_coefficient() {
        let f = p(&[1, 0, 1_000_000_007]);
        assert!(!squarefree_mod(&f, 1_000_000_007));
        assert!(f.is_squarefree().unwrap());
    }

    #[test]
    fn eval_matrix_on_vector_agrees_with_full_evaluation() {
        let m = RationalMatrix::from_i64_rows(&[&[2, 1], &[1, 3]]);
        let f = p(&[1, -2, 1]);
        let full = f.eval_matrix(&m).unwrap();
        let rows = m.to_integer_rows().unwrap();
        for j in 0..2 {
            let mut e = vec![BigInt::zero(); 2];
            e[j] = BigInt::one();
            let got = f.eval_matrix_on_vector(&rows, &e);
            let want: Vec<BigInt> = full.column(j).iter().map(|x| x.to_integer()).collect();
            assert_eq!(got, want);
        }
    }

    fn poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-6i64..7, 1..6).prop_map(|c| p(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 200, rng_seed: proptest::test_runner::RngSeed::Fixed(11), ..ProptestConfig::default() })]

        #[test]
        fn squarefree_matches_exact_gcd(f in poly()) {
            prop_assume!(!f.is_zero());
            let exact = f.gcd(&f.derivative()).degree() == Some(0) || f.degree() == Some(0);
            prop_assert_eq!(f.is_squarefree().unwrap(), exact);
        }

        #[test]
        fn product_division_roundtrip(a in poly(), b in poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn squared_factor_is_never_squarefree(a in poly(), b in poly()) {
            prop_assume!(a.degree().unwrap_or(0) >= 1 && !b.is_zero());
            prop_assert!(!(&a.pow(2) * &b).is_squarefree().unwrap());
        }
    }
}
