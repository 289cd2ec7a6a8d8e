//! Homogeneous binary forms and the substitution operators acting on them.
//!
//! A form of degree `r` is stored in the basis `x^a y^(r-a)`, `a = 0..=r`.
//! Integer 2×2 matrices act by `(γ* f)(x, y) = f(ax + cy, bx + dy)` for
//! `γ = [[a, b], [c, d]]`. With this convention `(αβ)* = α* ∘ β*`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// A homogeneous polynomial of degree `r` in `x` and `y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    coeffs: Vec<BigRational>,
}

impl HomogPoly {
    /// `coeffs[a]` is the coefficient of `x^a y^(r-a)`; the degree is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::DimensionMismatch(
                "a degree-r form needs r + 1 coefficients".into(),
            ));
        }
        Ok(HomogPoly { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(r: usize) -> Self {
        HomogPoly {
            coeffs: vec![BigRational::zero(); r + 1],
        }
    }

    /// `x^a y^(r-a)`.
    pub fn monomial(r: usize, a: usize) -> Self {
        assert!(a <= r, "exponent of x exceeds the degree");
        let mut p = Self::zero(r);
        p.coeffs[a] = BigRational::one();
        p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, a: usize) -> &BigRational {
        &self.coeffs[a]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `f(y, x)`.
    pub fn swapped(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        HomogPoly { coeffs: c }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        HomogPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let r = self.degree();
        let mut acc = BigRational::zero();
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * num_traits::pow(x.clone(), a) * num_traits::pow(y.clone(), r - a);
        }
        acc
    }

    /// `f(0, 1) + f(1, 0)`: the two boundary pairs of a Stern row.
    pub fn boundary_value(&self) -> BigRational {
        &self.coeffs[0] + &self.coeffs[self.degree()]
    }

    /// Common denominator `d` and integer numerators with `f = numerators / d`.
    pub(crate) fn integer_numerators(&self) -> (Vec<BigInt>, BigInt) {
        use num_integer::Integer;
        let d = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&d / c.denom()))
            .collect();
        (nums, d)
    }

    fn check_same_degree(&self, other: &Self) {
        assert_eq!(self.degree(), other.degree(), "forms of different degree");
    }
}

impl Add for &HomogPoly {
    type Output = HomogPoly;

    fn add(self, rhs: &HomogPoly) -> HomogPoly {
        self.check_same_degree(rhs);
        HomogPoly {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &HomogPoly {
    type Output = HomogPoly;

    fn sub(self, rhs: &HomogPoly) -> HomogPoly {
        self.check_same_degree(rhs);
        HomogPoly {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders terms from `x^r` down, e.g. `x^3 + 3x^2y + 3xy^2 + y^3`.
impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.degree();
        let mut first = true;
        for a in (0..=r).rev() {
            let c = &self.coeffs[a];
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
            let mono = monomial_name(a, r - a);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{mono}")?;
            } else {
                write!(f, "({mag}){mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `x^a y^b` spelled as in the CLI grammar, e.g. `x^2y`.
pub fn monomial_name(a: usize, b: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    format!("{}{}", part("x", a), part("y", b))
}

/// An integer 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// `σ`, acting by `f(x, y) ↦ f(x + y, y)`.
    pub fn sigma() -> Self {
        Self::new(1, 0, 1, 1)
    }

    /// `τ`, acting by `f(x, y) ↦ f(x, x + y)`.
    pub fn tau() -> Self {
        Self::new(1, 1, 0, 1)
    }

    /// `στ⁻¹`, of order 6.
    pub fn rho() -> Self {
        Self::new(1, -1, 1, 0)
    }

    /// `στ⁻¹σ`, of order 4.
    pub fn iota() -> Self {
        Self::new(0, -1, 1, 0)
    }

    /// Exchanges `x` and `y`.
    pub fn swap() -> Self {
        Self::new(0, 1, 1, 0)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Inverse of a matrix with determinant ±1.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if !det.abs().is_one() {
            return None;
        }
        Some(Mat2 {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        })
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficients of `(p x + q y)^e` in the basis `x^i y^(e-i)`.
fn linear_power(p: &BigInt, q: &BigInt, e: usize) -> Vec<BigInt> {
    let binom = binomial_row(e);
    let mut pp = vec![BigInt::one(); e + 1];
    let mut qp = vec![BigInt::one(); e + 1];
    for i in 1..=e {
        pp[i] = &pp[i - 1] * p;
        qp[i] = &qp[i - 1] * q;
    }
    (0..=e).map(|i| &binom[i] * &pp[i] * &qp[e - i]).collect()
}

/// `γ*(x^α y^(r-α)) = (ax + cy)^α (bx + dy)^(r-α)` in the monomial basis.
fn substitute_monomial(g: &Mat2, r: usize, alpha: usize) -> Vec<BigInt> {
    let left = linear_power(&g.a, &g.c, alpha);
    let right = linear_power(&g.b, &g.d, r - alpha);
    let mut out = vec![BigInt::zero(); r + 1];
    for (i, u) in left.iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for (j, v) in right.iter().enumerate() {
            if !v.is_zero() {
                out[i + j] += u * v;
            }
        }
    }
    out
}

/// `γ* f`.
pub fn substitute(g: &Mat2, f: &HomogPoly) -> HomogPoly {
    let r = f.degree();
    let mut out = vec![BigRational::zero(); r + 1];
    for (alpha, c) in f.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (a, v) in substitute_monomial(g, r, alpha).into_iter().enumerate() {
            if !v.is_zero() {
                out[a] += c * BigRational::from_integer(v);
            }
        }
    }
    HomogPoly { coeffs: out }
}

/// Matrix of `γ*` on degree-`r` forms: column `b` holds the coefficients of
/// `γ*(x^b y^(r-b))`, row `a` the coefficient of `x^a y^(r-a)`.
pub fn operator_matrix(g: &Mat2, r: usize) -> RationalMatrix {
    let cols: Vec<Vec<BigRational>> = (0..=r)
        .map(|b| {
            substitute_monomial(g, r, b)
                .into_iter()
                .map(BigRational::from_integer)
                .collect()
        })
        .collect();
    RationalMatrix::from_columns(r + 1, &cols)
}

/// The transfer operator `Φ = σ* + τ*`, with `Φ_ab = C(b, a) + C(r-b, r-a)`.
pub fn phi_matrix(r: usize) -> RationalMatrix {
    RationalMatrix::from_fn(r + 1, r + 1, |a, b| {
        let v = binomial(b, a) + if a >= b { binomial(r - b, r - a) } else { BigInt::zero() };
        BigRational::from_integer(v)
    })
}

/// Matrix of `f(x, y) ↦ f(y, x)`: the coefficient reversal.
pub fn swap_matrix(r: usize) -> RationalMatrix {
    RationalMatrix::from_fn(r + 1, r + 1, |a, b| {
        if a + b == r {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

/// The quotient of degree-`r` forms by `f(x, y) ≡ f(y, x)`.
///
/// Class `i` (for `i = 0..=r/2`) is `[x^(r-i) y^i]`, so the basis runs from
/// `[x^r]` downward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymQuotient {
    pub r: usize,
    /// `dim × (r+1)`: sends `x^a y^(r-a)` to the class of `x^max(a,r-a) y^min(a,r-a)`.
    pub projection: RationalMatrix,
    /// `(r+1) × dim`: the section sending class `i` to `x^(r-i) y^i`.
    pub lift: RationalMatrix,
    /// `Φ_sym = projection · Φ · lift`.
    pub phi_sym: RationalMatrix,
}

impl SymQuotient {
    pub fn new(r: usize) -> Self {
        let dim = sym_dim(r);
        let projection = RationalMatrix::from_fn(dim, r + 1, |i, a| {
            if a == r - i || a == i {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        let lift = RationalMatrix::from_fn(r + 1, dim, |a, i| {
            if a == r - i {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        let phi_sym = &(&projection * &phi_matrix(r)) * &lift;
        SymQuotient {
            r,
            projection,
            lift,
            phi_sym,
        }
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// Label of class `i`, e.g. `x^2y`.
    pub fn class_name(&self, i: usize) -> String {
        monomial_name(self.r - i, i)
    }

    /// Exponent of `x` in the representative monomial of class `i`.
    pub fn class_exponent(&self, i: usize) -> usize {
        self.r - i
    }
}

/// `⌈(r+1)/2⌉`.
pub fn sym_dim(r: usize) -> usize {
    r / 2 + 1
}

/// Projection and `Φ_sym` for degree `r`.
pub fn sym_quotient(r: usize) -> (RationalMatrix, RationalMatrix) {
    let q = SymQuotient::new(r);
    (q.projection, q.phi_sym)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(m: &RationalMatrix) -> Vec<Vec<i64>> {
        m.to_rows()
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect())
            .collect()
    }

    fn poly(c: &[i64]) -> HomogPoly {
        HomogPoly::from_i64(c).unwrap()
    }

    /// Expands `f(p1 x + q1 y, p2 x + q2 y)` by brute force: evaluate at
    /// r + 1 points on the line y = 1 and compare. Independent of the
    /// binomial expansion used by `substitute`.
    fn agrees_pointwise(g: &Mat2, f: &HomogPoly, h: &HomogPoly) -> bool {
        (0..=f.degree() as i64 + 1).all(|t| {
            let x = BigRational::from_integer(t.into());
            let y = BigRational::from_integer((2 * t - 3).into());
            let gx = BigRational::from_integer(g.a.clone()) * &x + BigRational::from_integer(g.c.clone()) * &y;
            let gy = BigRational::from_integer(g.b.clone()) * &x + BigRational::from_integer(g.d.clone()) * &y;
            f.eval(&gx, &gy) == h.eval(&x, &y)
        })
    }

    #[test]
    fn substitute_examples() {
        // σ*(x³) = (x+y)³
        assert_eq!(substitute(&Mat2::sigma(), &HomogPoly::monomial(3, 3)), poly(&[1, 3, 3, 1]));
        let f = poly(&[1, -2, 5]);
        assert_eq!(substitute(&Mat2::identity(), &f), f);
        // ι*(x²) = y²
        assert_eq!(substitute(&Mat2::iota(), &HomogPoly::monomial(2, 2)), HomogPoly::monomial(2, 0));
        assert_eq!(substitute(&Mat2::tau(), &HomogPoly::monomial(3, 0)), poly(&[1, 3, 3, 1]));
    }

    #[test]
    fn cubic_example_rows() {
        // σ*(x²y) + τ*(x²y) = x³ + 2x²y + 2xy² + y³
        let f = HomogPoly::monomial(3, 2);
        let s = &substitute(&Mat2::sigma(), &f) + &substitute(&Mat2::tau(), &f);
        assert_eq!(s, poly(&[1, 2, 2, 1]));
    }

    #[test]
    fn built_in_matrices() {
        let tau_inv = Mat2::tau().inverse().unwrap();
        assert_eq!(&Mat2::sigma() * &tau_inv, Mat2::rho());
        assert_eq!(&(&Mat2::sigma() * &tau_inv) * &Mat2::sigma(), Mat2::iota());
        for g in [Mat2::sigma(), Mat2::tau(), Mat2::rho(), Mat2::iota()] {
            assert_eq!(g.det(), BigInt::one());
        }
    }

    #[test]
    fn sigma_matrix_is_lower_binomial() {
        assert_eq!(
            ints(&operator_matrix(&Mat2::sigma(), 3)),
            vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3], vec![0, 0, 1, 3], vec![0, 0, 0, 1]]
        );
        assert_eq!(operator_matrix(&Mat2::identity(), 5), RationalMatrix::identity(6));
    }

    #[test]
    fn sigma_matrix_in_descending_basis_matches_displayed_summand() {
        // Reading rows and columns from x³ down gives the lower-triangular
        // summand with rows (1), (3,1), (3,2,1), (1,1,1,1).
        let m = operator_matrix(&Mat2::sigma(), 3);
        let rev = RationalMatrix::from_fn(4, 4, |i, j| m[(3 - i, 3 - j)].clone());
        assert_eq!(
            ints(&rev),
            vec![vec![1, 0, 0, 0], vec![3, 1, 0, 0], vec![3, 2, 1, 0], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn rho_matrix_matches_substitution_per_monomial() {
        let m = operator_matrix(&Mat2::rho(), 2);
        for b in 0..=2 {
            let img = substitute(&Mat2::rho(), &HomogPoly::monomial(2, b));
            assert!(agrees_pointwise(&Mat2::rho(), &HomogPoly::monomial(2, b), &img));
            assert_eq!(m.column(b), img.coeffs().to_vec());
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(
            ints(&phi_matrix(3)),
            vec![vec![2, 1, 1, 1], vec![3, 2, 2, 3], vec![3, 2, 2, 3], vec![1, 1, 1, 2]]
        );
        assert_eq!(ints(&phi_matrix(0)), vec![vec![2]]);
        assert_eq!(ints(&phi_matrix(2)), vec![vec![2, 1, 1], vec![2, 2, 2], vec![1, 1, 2]]);
    }

    #[test]
    fn sym_quotient_examples() {
        let (_, s3) = sym_quotient(3);
        assert_eq!(ints(&s3), vec![vec![3, 2], vec![6, 4]]);
        let (_, s0) = sym_quotient(0);
        assert_eq!(ints(&s0), vec![vec![2]]);
        let (p2, s2) = sym_quotient(2);
        let phi2 = phi_matrix(2);
        // oracle: project each column of Φ(2)
        for b in 0..=2 {
            let col = p2.mul_vec(&phi2.column(b));
            let via_sym = s2.mul_vec(&p2.column(b));
            assert_eq!(col, via_sym);
        }
        assert_eq!(ints(&s2), vec![vec![3, 2], vec![2, 2]]);
    }

    #[test]
    fn phi_is_sum_of_sigma_and_tau_and_commutes_with_swap() {
        for r in 0..=40 {
            let phi = phi_matrix(r);
            let sum = &operator_matrix(&Mat2::sigma(), r) + &operator_matrix(&Mat2::tau(), r);
            assert_eq!(phi, sum, "r = {r}");
            let s = swap_matrix(r);
            assert_eq!(&phi * &s, &s * &phi, "r = {r}");
            assert_eq!(operator_matrix(&Mat2::swap(), r), s);
        }
    }

    #[test]
    fn finite_orders_of_rho_and_iota() {
        for r in 0..=40 {
            let id = RationalMatrix::identity(r + 1);
            let rho = operator_matrix(&Mat2::rho(), r);
            if r % 2 == 0 {
                assert_eq!(rho.pow(3).unwrap(), id, "r = {r}");
                assert_eq!(operator_matrix(&Mat2::iota(), r).pow(2).unwrap(), id, "r = {r}");
            } else {
                assert_eq!(rho.pow(6).unwrap(), id, "r = {r}");
            }
        }
    }

    #[test]
    fn commuting_square() {
        for r in 0..=40 {
            let q = SymQuotient::new(r);
            assert_eq!(q.dim(), (r + 2) / 2);
            assert_eq!(&q.projection * &phi_matrix(r), &q.phi_sym * &q.projection, "r = {r}");
            assert_eq!(&q.projection * &q.lift, RationalMatrix::identity(q.dim()));
        }
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, 3, 3, 1]).to_string(), "x^3 + 3x^2y + 3xy^2 + y^3");
        assert_eq!(poly(&[0, -1, 0]).to_string(), "-xy");
        assert_eq!(poly(&[0, 0]).to_string(), "0");
        assert_eq!(poly(&[7]).to_string(), "7");
    }

    fn mat2() -> impl Strategy<Value = Mat2> {
        (-3i64..4, -3i64..4, -3i64..4, -3i64..4).prop_map(|(a, b, c, d)| Mat2::new(a, b, c, d))
    }

    fn form() -> impl Strategy<Value = HomogPoly> {
        proptest::collection::vec((-9i64..10, 1i64..5), 1..8).prop_map(|v| {
            HomogPoly::new(v.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 256, rng_seed: proptest::test_runner::RngSeed::Fixed(3), ..ProptestConfig::default() })]

        #[test]
        fn substitution_composes(g in mat2(), h in mat2(), f in form()) {
            let gh = &g * &h;
            prop_assert_eq!(substitute(&gh, &f), substitute(&g, &substitute(&h, &f)));
        }

        #[test]
        fn substitution_matches_pointwise_evaluation(g in mat2(), f in form()) {
            prop_assert!(agrees_pointwise(&g, &f, &substitute(&g, &f)));
        }

        #[test]
        fn operator_matrix_acts_on_coefficients(g in mat2(), f in form()) {
            let m = operator_matrix(&g, f.degree());
            prop_assert_eq!(m.mul_vec(f.coeffs()), substitute(&g, &f).coeffs().to_vec());
        }
    }
}
