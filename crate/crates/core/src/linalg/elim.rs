//! Fraction-free (Bareiss) elimination and what is built on it: rank,
//! kernels and exact linear solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::RationalMatrix;

// Below this many entries per elimination step the rayon overhead dominates.
const PAR_THRESHOLD: usize = 2048;

/// Row echelon form produced by Bareiss elimination. Only the nonzero rows
/// are kept; `rows[i]` has its leading entry in column `pivots[i]`.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&j| !is_pivot[j]).collect()
    }

    /// Back-substitutes for the pivot variables given values of the
    /// non-pivot ones already placed in `v`. `rhs` is the column the system
    /// was augmented with, if any.
    fn back_substitute(&self, v: &mut [BigRational], rhs: Option<&[BigInt]>) {
        for i in (0..self.rank()).rev() {
            let p = self.pivots[i];
            let row = &self.rows[i];
            let mut s = match rhs {
                Some(b) => BigRational::from_integer(b[i].clone()),
                None => BigRational::zero(),
            };
            for j in p + 1..v.len() {
                if !row[j].is_zero() && !v[j].is_zero() {
                    s -= &v[j] * &row[j];
                }
            }
            v[p] = s / &row[p];
        }
    }
}

/// Bareiss elimination on an integer matrix with `cols` columns.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact; this is asserted.
pub fn bareiss(mut m: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        // smallest pivot keeps the intermediate entries short
        let Some(p) = (r..nrows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].bits())
        else {
            continue;
        };
        m.swap(r, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let update = |row: &mut Vec<BigInt>| eliminate_row(row, pivot_row, c, &prev);
        if bottom.len() * (cols - c) >= PAR_THRESHOLD {
            bottom.par_iter_mut().for_each(update);
        } else {
            bottom.iter_mut().for_each(update);
        }
        prev = top[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon {
        rows: m,
        pivots,
        cols,
    }
}

fn eliminate_row(row: &mut [BigInt], pivot_row: &[BigInt], c: usize, prev: &BigInt) {
    let pivot = &pivot_row[c];
    let factor = std::mem::take(&mut row[c]);
    let exact = prev.is_one();
    for j in c + 1..row.len() {
        let mut t = pivot * &row[j];
        if !factor.is_zero() && !pivot_row[j].is_zero() {
            t -= &factor * &pivot_row[j];
        }
        if exact {
            row[j] = t;
        } else {
            let (q, rem) = t.div_rem(prev);
            assert!(rem.is_zero(), "Bareiss step produced an inexact division");
            row[j] = q;
        }
    }
}

/// Echelon form of a rational matrix after clearing denominators row by row.
pub fn echelon(m: &RationalMatrix) -> Echelon {
    bareiss(m.row_scaled_integers(), m.cols())
}

/// Exact rank.
pub fn rank(m: &RationalMatrix) -> usize {
    echelon(m).rank()
}

/// `cols - rank`.
pub fn nullity(m: &RationalMatrix) -> usize {
    m.cols() - rank(m)
}

/// Basis of the right kernel in canonical form: one vector per non-pivot
/// column `f`, carrying a 1 at `f` and 0 at every other non-pivot column.
/// This is the basis read off the reduced row echelon form, so it depends only
/// on the row space of `m`.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<BigRational>> {
    let e = echelon(m);
    let basis = |f: usize| {
        let mut v = vec![BigRational::zero(); e.cols];
        v[f] = BigRational::one();
        e.back_substitute(&mut v, None);
        v
    };
    let free = e.free_columns();
    if free.len() * e.cols >= PAR_THRESHOLD {
        free.into_par_iter().map(basis).collect()
    } else {
        free.into_iter().map(basis).collect()
    }
}

/// Solves `a x = b` exactly. Returns `None` when the system is inconsistent;
/// otherwise the solution with every free variable set to zero.
pub fn solve(a: &RationalMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length must match row count");
    let n = a.cols();
    let augmented = RationalMatrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let mut e = echelon(&augmented);
    if e.pivots.last() == Some(&n) {
        return None;
    }
    let rhs: Vec<BigInt> = e.rows.iter_mut().map(|r| r.pop().unwrap()).collect();
    e.cols = n;
    let mut x = vec![BigRational::zero(); n];
    e.back_substitute(&mut x, Some(&rhs));
    Some(x)
}

/// Normalizes a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. Used to compare spans independent of scaling.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in &mut ints {
            *x /= &g;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut ints {
            *x = -&*x;
        }
    }
    ints
}
