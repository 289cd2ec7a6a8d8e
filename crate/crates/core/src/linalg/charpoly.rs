//! Characteristic and minimal polynomials, and eigenvalue multiplicities at
//! rational points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::elim::nullity;
use super::{IntPolynomial, RationalMatrix};
use crate::error::{Error, Result};

fn integer_square(m: &RationalMatrix) -> Result<Vec<Vec<BigInt>>> {
    m.require_square()?;
    m.to_integer_rows().ok_or(Error::NonIntegral)
}

/// `det(xI - M)` by Berkowitz's division-free algorithm.
///
/// The matrix must be square with integer entries.
pub fn charpoly(m: &RationalMatrix) -> Result<IntPolynomial> {
    let a = integer_square(m)?;
    Ok(berkowitz(&a))
}

fn berkowitz(a: &[Vec<BigInt>]) -> IntPolynomial {
    let n = a.len();
    // coefficients of the charpoly of the leading k×k block, highest degree first
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        // Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C
        // where A is the leading k×k block, R = a[k][..k], C = a[..k][k].
        let mut t = Vec::with_capacity(k + 2);
        t.push(BigInt::one());
        t.push(-&a[k][k]);
        let mut r: Vec<BigInt> = a[k][..k].to_vec();
        for _ in 0..k {
            let rc: BigInt = (0..k)
                .filter(|&i| !r[i].is_zero() && !a[i][k].is_zero())
                .map(|i| &r[i] * &a[i][k])
                .sum();
            t.push(-rc);
            // r <- r A
            r = (0..k)
                .map(|j| {
                    (0..k)
                        .filter(|&i| !r[i].is_zero() && !a[i][j].is_zero())
                        .map(|i| &r[i] * &a[i][j])
                        .sum()
                })
                .collect();
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(k) {
                if !t[i - j].is_zero() && !v[j].is_zero() {
                    *slot += &t[i - j] * &v[j];
                }
            }
        }
        v = next;
    }
    v.reverse();
    IntPolynomial::new(v)
}

/// Minimal polynomial of the vector `v` under `M`: the monic polynomial `p`
/// of least degree with `p(M) v = 0`, found from the first linear dependence
/// in the Krylov sequence `v, Mv, M²v, ...`.
pub fn krylov_minpoly(m: &RationalMatrix, v: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = m.require_square()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for a {n}x{n} matrix",
            v.len()
        )));
    }
    // Reduced basis of the Krylov space so far; each entry carries its pivot
    // and its expression in terms of the powers M^0 v .. M^k v.
    let mut basis: Vec<(usize, Vec<BigRational>, Vec<BigRational>)> = Vec::new();
    let mut w = v.to_vec();
    for k in 0..=n {
        let mut comb = vec![BigRational::zero(); k + 1];
        comb[k] = BigRational::one();
        let mut reduced = w.clone();
        for (p, b, c) in &basis {
            if reduced[*p].is_zero() {
                continue;
            }
            let f = &reduced[*p] / &b[*p];
            for (x, y) in reduced.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in comb.iter_mut().zip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        match reduced.iter().position(|x| !x.is_zero()) {
            None => return Ok(comb),
            Some(p) => basis.push((p, reduced, comb)),
        }
        w = m.mul_vec(&w);
    }
    unreachable!("Krylov sequence in dimension {n} must become dependent")
}

/// Monic minimal polynomial.
///
/// Starts from the squarefree part of the characteristic polynomial, which
/// always divides the minimal polynomial, and then walks the standard basis:
/// whenever the current candidate fails to annihilate `e_j`, the Krylov
/// minimal polynomial of `e_j` is folded in by lcm. The result annihilates
/// every `e_j`, hence `M`, and divides every annihilator.
pub fn minpoly(m: &RationalMatrix) -> Result<IntPolynomial> {
    let a = integer_square(m)?;
    minpoly_with(m, &berkowitz(&a))
}

/// Same as [`minpoly`] with a precomputed characteristic polynomial.
pub fn minpoly_with(m: &RationalMatrix, charpoly: &IntPolynomial) -> Result<IntPolynomial> {
    let a = integer_square(m)?;
    let n = a.len();
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let mut mu = charpoly.squarefree_part()?;
    for j in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[j] = BigInt::one();
        if mu.eval_matrix_on_vector(&a, &e).iter().all(Zero::is_zero) {
            continue;
        }
        let ej: Vec<BigRational> = e.into_iter().map(BigRational::from_integer).collect();
        let local = krylov_minpoly(m, &ej)?;
        // monic with rational coefficients; for an integer matrix the vector
        // minimal polynomial divides the monic integer charpoly, so it is
        // integral by Gauss's lemma
        let local = IntPolynomial::new(local.into_iter().map(|c| c.to_integer()).collect());
        mu = mu.lcm(&local)?;
    }
    Ok(mu)
}

/// `true` iff `p(M) = 0`, checked column by column.
pub fn annihilates(p: &IntPolynomial, m: &RationalMatrix) -> Result<bool> {
    let a = integer_square(m)?;
    let n = a.len();
    Ok((0..n).all(|j| {
        let mut e = vec![BigInt::zero(); n];
        e[j] = BigInt::one();
        p.eval_matrix_on_vector(&a, &e).iter().all(Zero::is_zero)
    }))
}

/// Geometric and algebraic multiplicity of an eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Multiplicity {
    /// `nullity(M - λI)`.
    pub geometric: usize,
    /// Exponent of `(x - λ)` in the characteristic polynomial.
    pub algebraic: usize,
}

pub fn eigen_multiplicity(m: &RationalMatrix, lambda: &BigRational) -> Result<Multiplicity> {
    let cp = charpoly(m)?;
    eigen_multiplicity_with(m, &cp, lambda)
}

/// Same as [`eigen_multiplicity`] with a precomputed characteristic polynomial.
pub fn eigen_multiplicity_with(
    m: &RationalMatrix,
    charpoly: &IntPolynomial,
    lambda: &BigRational,
) -> Result<Multiplicity> {
    Ok(Multiplicity {
        geometric: nullity(&m.shifted(lambda)?),
        algebraic: charpoly.root_multiplicity(lambda)?,
    })
}

/// Minimal polynomial of `M` found the slow way: first dependence among the
/// flattened powers `I, M, M², ...`. Only for cross-checking small inputs.
pub fn minpoly_by_matrix_powers(m: &RationalMatrix) -> Result<IntPolynomial> {
    let n = m.require_square()?;
    let mut powers: Vec<Vec<BigRational>> = Vec::new();
    let mut p = RationalMatrix::identity(n);
    for k in 0..=n {
        let flat: Vec<BigRational> = p.to_rows().into_iter().flatten().collect();
        powers.push(flat);
        let cols = RationalMatrix::from_columns(n * n, &powers[..k]);
        if let Some(c) = super::elim::solve(&cols, &powers[k]) {
            let mut coeffs: Vec<BigRational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(BigRational::one());
            if coeffs.iter().any(|x| !x.is_integer()) {
                return Err(Error::NonIntegral);
            }
            return Ok(IntPolynomial::new(coeffs.into_iter().map(|x| x.to_integer()).collect()));
        }
        p = &p * m;
    }
    unreachable!("powers of an n×n matrix are dependent by degree n")
}
