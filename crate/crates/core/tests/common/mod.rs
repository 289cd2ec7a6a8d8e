//! Seeded property checks shared by the `properties` and `acceptance`
//! targets. Each returns the number of cases checked, or a description of
//! the first counterexample.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stern_core::linalg::{charpoly, kernel_basis, minpoly, nullity, rank, solve, RationalMatrix};
use stern_core::poly::{operator_matrix, substitute, HomogPoly, Mat2};
use stern_core::recurrence::{min_recurrence, verify_recurrence};
use stern_core::stern::{power_sum_direct, power_sum_fast, stern_row};

pub type Check = Result<usize, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into())
}

pub fn form(rng: &mut impl Rng, r: usize) -> HomogPoly {
    HomogPoly::new((0..=r).map(|_| rational(rng)).collect()).unwrap()
}

pub fn int_form(rng: &mut impl Rng, r: usize) -> HomogPoly {
    let c: Vec<i64> = (0..=r).map(|_| rng.gen_range(-20i64..=20)).collect();
    HomogPoly::from_i64(&c).unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

pub fn palindromy() -> Check {
    for n in 1..=20u32 {
        let row = stern_row(n).map_err(|e| e.to_string())?;
        ensure(row.len() == (1usize << n) - 1, || format!("row {n} has length {}", row.len()))?;
        ensure(row.is_palindrome(), || format!("row {n} is not a palindrome"))?;
    }
    Ok(20)
}

pub fn swap_symmetry(seed: u64, cases: usize) -> Check {
    let mut g = rng(seed);
    for _ in 0..cases {
        let r = g.gen_range(0..=8);
        let n = g.gen_range(1..=12u32);
        let f = form(&mut g, r);
        let a = power_sum_direct(n, &f).map_err(|e| e.to_string())?;
        let b = power_sum_direct(n, &f.swapped()).map_err(|e| e.to_string())?;
        let c = power_sum_fast(n, &f.swapped()).map_err(|e| e.to_string())?;
        ensure(a == b && b == c, || format!("S_{n}({f}) not swap-symmetric"))?;
    }
    Ok(cases)
}

pub fn linearity(seed: u64, cases: usize) -> Check {
    let mut g = rng(seed);
    for _ in 0..cases {
        let r = g.gen_range(0..=8);
        let n = g.gen_range(1..=14u32);
        let (f, h) = (form(&mut g, r), form(&mut g, r));
        let (alpha, beta) = (rational(&mut g), rational(&mut g));
        let combo = &f.scale(&alpha) + &h.scale(&beta);
        let lhs = power_sum_fast(n, &combo).map_err(|e| e.to_string())?;
        let rhs = alpha * power_sum_direct(n, &f).map_err(|e| e.to_string())?
            + beta * power_sum_direct(n, &h).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("linearity fails at n = {n} for {f}, {h}"))?;
    }
    Ok(cases)
}

fn mat2(g: &mut impl Rng) -> Mat2 {
    let mut e = || g.gen_range(-3i64..=3);
    Mat2::new(e(), e(), e(), e())
}

/// Composition of substitutions: `(αβ)*f = α*(β*f)`, pointwise and as
/// operator matrices.
pub fn substitution_composition(seed: u64, cases: usize) -> Check {
    let mut g = rng(seed);
    for _ in 0..cases {
        let r = g.gen_range(0..=7);
        let (a, b) = (mat2(&mut g), mat2(&mut g));
        let f = form(&mut g, r);
        let ab = &a * &b;
        ensure(substitute(&ab, &f) == substitute(&a, &substitute(&b, &f)), || {
            format!("composition fails for {a:?}, {b:?} on {f}")
        })?;
        ensure(
            operator_matrix(&ab, r) == &operator_matrix(&a, r) * &operator_matrix(&b, r),
            || format!("operator matrices do not compose for {a:?}, {b:?}"),
        )?;
    }
    Ok(cases)
}

/// Integer matrices, some with repeated eigenvalues: a random unimodular
/// conjugate of a block-diagonal matrix with small Jordan blocks.
fn structured_matrix(g: &mut impl Rng) -> RationalMatrix {
    let n = g.gen_range(1..=6usize);
    if g.gen_bool(0.5) {
        return RationalMatrix::from_fn(n, n, |_, _| BigRational::from_integer(g.gen_range(-4i64..=4).into()));
    }
    let mut j = RationalMatrix::zeros(n, n);
    let mut i = 0;
    while i < n {
        let lambda = BigRational::from_integer(g.gen_range(-2i64..=2).into());
        let size = g.gen_range(1..=(n - i).min(3));
        for k in i..i + size {
            j[(k, k)] = lambda.clone();
            if k + 1 < i + size {
                j[(k, k + 1)] = BigRational::one();
            }
        }
        i += size;
    }
    // unimodular U = I + s·E_pq and its inverse I − s·E_pq
    let mut m = j;
    for _ in 0..3 {
        let (p, q) = (g.gen_range(0..n), g.gen_range(0..n));
        if p == q {
            continue;
        }
        let s = BigRational::from_integer(g.gen_range(-2i64..=2).into());
        let mut u = RationalMatrix::identity(n);
        let mut ui = RationalMatrix::identity(n);
        u[(p, q)] = s.clone();
        ui[(p, q)] = -s;
        m = &(&u * &m) * &ui;
    }
    m
}

pub fn minpoly_divides_charpoly(seed: u64, cases: usize) -> Check {
    let mut g = rng(seed);
    for _ in 0..cases {
        let m = structured_matrix(&mut g);
        let cp = charpoly(&m).map_err(|e| e.to_string())?;
        let mp = minpoly(&m).map_err(|e| e.to_string())?;
        ensure(cp.exact_div(&mp).is_ok(), || format!("minpoly {mp} does not divide {cp}"))?;
        let at = mp.eval_matrix(&m).map_err(|e| e.to_string())?;
        ensure(at.is_zero(), || format!("minpoly {mp} does not annihilate {m}"))?;
        ensure(cp.eval_matrix(&m).map_err(|e| e.to_string())?.is_zero(), || {
            format!("charpoly {cp} does not annihilate {m}")
        })?;
    }
    Ok(cases)
}

pub fn rank_nullity(seed: u64, cases: usize) -> Check {
    let mut g = rng(seed);
    for _ in 0..cases {
        let (rows, cols) = (g.gen_range(1..=7usize), g.gen_range(1..=7usize));
        let mut m = RationalMatrix::from_fn(rows, cols, |_, _| rational(&mut g));
        // force some dependence
        if rows > 1 && g.gen_bool(0.5) {
            let k = rational(&mut g);
            for j in 0..cols {
                m[(rows - 1, j)] = &m[(0, j)] * &k;
            }
        }
        let (rk, nl) = (rank(&m), nullity(&m));
        ensure(rk + nl == cols, || format!("rank {rk} + nullity {nl} != {cols} for {m}"))?;
        let basis = kernel_basis(&m);
        ensure(basis.len() == nl, || "kernel basis size differs from nullity".into())?;
        for v in &basis {
            ensure(m.mul_vec(v).iter().all(Zero::is_zero), || "kernel vector not in kernel".into())?;
        }
    }
    Ok(cases)
}

/// Sequences from random recurrences of length up to 4: the mined
/// recurrence verifies, is no longer than the generating one, and the
/// Hankel system one shorter has no solution.
pub fn hankel_minimality(seed: u64, cases: usize) -> Check {
    let mut g = rng(seed);
    for _ in 0..cases {
        let k = g.gen_range(1..=4usize);
        let coeffs: Vec<BigRational> = (0..k).map(|_| rational(&mut g)).collect();
        let mut seq: Vec<BigRational> = (0..k).map(|_| rational(&mut g)).collect();
        while seq.len() < 2 * k + 10 {
            let n = seq.len();
            let next = (0..k).fold(BigRational::zero(), |acc, j| acc + &coeffs[j] * &seq[n - 1 - j]);
            seq.push(next);
        }
        let rec = min_recurrence(&seq, 1).map_err(|e| e.to_string())?;
        let l = rec.length();
        ensure(l <= k, || format!("mined length {l} exceeds generating length {k}"))?;
        ensure(verify_recurrence(&seq, &rec), || "mined recurrence does not verify".into())?;
        if l > 0 {
            let shorter = l - 1;
            // equations for n = shorter+1 ..= len: S_n = sum_j c_j S_(n-1-j)
            let eqs = seq.len() - shorter;
            let a = RationalMatrix::from_fn(eqs, shorter, |i, j| seq[i + shorter - 1 - j].clone());
            let b: Vec<BigRational> = seq[shorter..].to_vec();
            ensure(solve(&a, &b).is_none(), || format!("a length-{shorter} recurrence also fits"))?;
        }
    }
    Ok(cases)
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
