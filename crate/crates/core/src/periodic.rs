//! Periodic functions of `r` restricted to one parity class, written
//! `slope·r + [a_1, ..., a_p]_r`.
//!
//! The bracket has period `2p`. On even `r`, `a_1` sits at `r ≡ 0 (mod 2p)`,
//! `a_2` at `r ≡ 2`, and so on; on odd `r`, `a_1` sits at `r ≡ 1`, `a_2` at
//! `r ≡ 3`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(r: u64) -> Parity {
        if r % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    fn anchor(self) -> u64 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicFn {
    pub slope: BigRational,
    pub values: Vec<BigRational>,
    pub parity: Parity,
}

/// `n/d` as an exact rational.
pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl PeriodicFn {
    pub fn new(slope: BigRational, values: Vec<BigRational>, parity: Parity) -> Self {
        assert!(!values.is_empty(), "a bracket needs at least one value");
        PeriodicFn {
            slope,
            values,
            parity,
        }
    }

    /// Shorthand taking `(numerator, denominator)` pairs.
    pub fn from_fracs(slope: (i64, i64), values: &[(i64, i64)], parity: Parity) -> Self {
        Self::new(
            frac(slope.0, slope.1),
            values.iter().map(|&(n, d)| frac(n, d)).collect(),
            parity,
        )
    }

    pub fn period(&self) -> u64 {
        2 * self.values.len() as u64
    }

    /// `slope·r + a_j`, where `j` is picked from the residue of `r`.
    pub fn eval(&self, r: u64) -> Result<BigRational> {
        if Parity::of(r) != self.parity {
            return Err(Error::Parity {
                what: "this bracket formula",
                parity: self.parity.name(),
                r,
            });
        }
        let j = ((r - self.parity.anchor()) / 2) as usize % self.values.len();
        Ok(&self.slope * BigRational::from_integer(r.into()) + &self.values[j])
    }

    /// Evaluates and requires a nonnegative integer, as for a dimension.
    pub fn eval_count(&self, r: u64) -> Result<u64> {
        let v = self.eval(r)?;
        if !v.is_integer() || v.is_negative() {
            return Err(Error::InvalidRange(format!(
                "{self} at r = {r} gives {v}, which is not a nonnegative integer"
            )));
        }
        Ok(v.to_integer().to_u64().expect("small count"))
    }
}

impl fmt::Display for PeriodicFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.slope.is_zero() {
            write!(f, "{}·r + ", self.slope)?;
        }
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]_r ({} r)", self.parity.name())
    }
}

/// The closed-form predictions, as functions of `r`.
pub mod formulas {
    use super::{Parity, PeriodicFn};

    pub fn phi_zero() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 3), &[(-1, 3), (1, 1), (1, 3)], Parity::Odd)
    }

    pub fn phi_sym_zero() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 6), &[(-1, 6), (1, 2), (1, 6)], Parity::Odd)
    }

    pub fn phi_one() -> PeriodicFn {
        PeriodicFn::from_fracs(
            (1, 6),
            &[(-1, 1), (2, 3), (1, 3), (0, 1), (-1, 3), (4, 3)],
            Parity::Even,
        )
    }

    pub fn phi_minus_one() -> PeriodicFn {
        PeriodicFn::from_fracs(
            (1, 6),
            &[(0, 1), (-1, 3), (4, 3), (-1, 1), (2, 3), (1, 3)],
            Parity::Even,
        )
    }

    pub fn phi_pm_sum() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 3), &[(-1, 1), (1, 3), (5, 3)], Parity::Even)
    }

    pub fn phi_sym_one() -> PeriodicFn {
        PeriodicFn::from_fracs(
            (1, 12),
            &[(-1, 1), (-1, 6), (-1, 3), (-1, 2), (-2, 3), (1, 6)],
            Parity::Even,
        )
    }

    pub fn phi_sym_minus_one() -> PeriodicFn {
        PeriodicFn::from_fracs(
            (1, 12),
            &[(0, 1), (-1, 6), (2, 3), (-1, 2), (1, 3), (1, 6)],
            Parity::Even,
        )
    }

    pub fn phi_sym_pm_sum() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 6), &[(-1, 1), (-1, 3), (1, 3)], Parity::Even)
    }

    pub fn dim_x() -> PeriodicFn {
        PeriodicFn::from_fracs((2, 3), &[(0, 1), (2, 3), (4, 3)], Parity::Even)
    }

    pub fn dim_y_plus() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 2), &[(1, 1), (0, 1)], Parity::Even)
    }

    pub fn dim_y_minus() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 2), &[(0, 1), (1, 1)], Parity::Even)
    }

    pub fn dim_x_sym() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 3), &[(0, 1), (1, 3), (2, 3)], Parity::Even)
    }

    pub fn dim_y_plus_sym() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 4), &[(1, 1), (1, 2)], Parity::Even)
    }

    pub fn dim_y_minus_sym() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 4), &[(0, 1), (1, 2)], Parity::Even)
    }

    /// Lower bound on `dim(X ∩ Y+)`; it is also the `m(Φ, −1)` bound.
    pub fn x_cap_y_plus() -> PeriodicFn {
        phi_minus_one()
    }

    /// Lower bound on `dim(X ∩ Y−)`; it is also the `m(Φ, 1)` bound.
    pub fn x_cap_y_minus() -> PeriodicFn {
        phi_one()
    }

    pub fn x_cap_y_plus_sym() -> PeriodicFn {
        phi_sym_minus_one()
    }

    pub fn x_cap_y_minus_sym() -> PeriodicFn {
        phi_sym_one()
    }

    pub fn corollary_odd() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 3), &[(2, 3), (0, 1), (1, 3)], Parity::Odd)
    }

    pub fn corollary_even() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 3), &[(4, 1), (10, 3), (8, 3)], Parity::Even)
    }

    pub fn corollary_even_affine() -> PeriodicFn {
        PeriodicFn::from_fracs((1, 3), &[(2, 1), (4, 3), (2, 3)], Parity::Even)
    }
}

#[cfg(test)]
mod tests {
    use super::formulas::*;
    use super::*;

    #[test]
    fn eval_examples() {
        assert_eq!(phi_zero().eval(3).unwrap(), frac(2, 1));
        assert_eq!(phi_sym_zero().eval(1).unwrap(), frac(0, 1));
        let c = PeriodicFn::from_fracs((0, 1), &[(5, 7)], Parity::Even);
        for r in (0..20).step_by(2) {
            assert_eq!(c.eval(r).unwrap(), frac(5, 7));
        }
        let c = PeriodicFn::from_fracs((0, 1), &[(5, 7)], Parity::Odd);
        assert_eq!(c.eval(9).unwrap(), frac(5, 7));
    }

    #[test]
    fn parity_mismatch_is_an_error() {
        assert!(matches!(phi_zero().eval(4), Err(Error::Parity { r: 4, .. })));
        assert!(matches!(phi_one().eval(3), Err(Error::Parity { .. })));
    }

    #[test]
    fn anchors() {
        let f = PeriodicFn::from_fracs((0, 1), &[(1, 1), (2, 1), (3, 1)], Parity::Odd);
        let got: Vec<_> = [1, 3, 5, 7, 9, 11].iter().map(|&r| f.eval(r).unwrap()).collect();
        assert_eq!(got, [1, 2, 3, 1, 2, 3].map(|v| frac(v, 1)));
        let g = PeriodicFn::from_fracs((0, 1), &[(1, 1), (2, 1), (3, 1)], Parity::Even);
        let got: Vec<_> = [0, 2, 4, 6, 8].iter().map(|&r| g.eval(r).unwrap()).collect();
        assert_eq!(got, [1, 2, 3, 1, 2].map(|v| frac(v, 1)));
    }

    #[test]
    fn small_degree_predictions() {
        // r = 2: Φ has charpoly (x − 1)(x² − 5x + 2)
        assert_eq!(phi_one().eval_count(2).unwrap(), 1);
        assert_eq!(phi_minus_one().eval_count(2).unwrap(), 0);
        // r = 1: Φ = [[2,1],[1,2]] has eigenvalues 1 and 3
        assert_eq!(phi_zero().eval_count(1).unwrap(), 0);
        assert_eq!(phi_sym_zero().eval_count(3).unwrap(), 1);
    }

    #[test]
    fn counts_are_nonnegative_integers() {
        let odd = [phi_zero(), phi_sym_zero(), corollary_odd()];
        let even = [
            phi_one(),
            phi_minus_one(),
            phi_pm_sum(),
            phi_sym_one(),
            phi_sym_minus_one(),
            phi_sym_pm_sum(),
            dim_x(),
            dim_y_plus(),
            dim_y_minus(),
            dim_x_sym(),
            dim_y_plus_sym(),
            dim_y_minus_sym(),
            corollary_even(),
            corollary_even_affine(),
        ];
        for r in 1..=200u64 {
            let fs: &[PeriodicFn] = if r % 2 == 1 { &odd } else { &even };
            for f in fs {
                assert!(f.eval_count(r).is_ok(), "{f} at r = {r}");
            }
        }
    }

    #[test]
    fn period_is_twice_the_bracket_length() {
        for f in [phi_one(), dim_y_plus_sym(), phi_zero()] {
            let start = f.parity.anchor();
            for r in (start..60).step_by(2) {
                assert_eq!(
                    f.eval(r + f.period()).unwrap() - &f.slope * frac(f.period() as i64, 1),
                    f.eval(r).unwrap()
                );
            }
        }
    }

    #[test]
    fn inclusion_exclusion_matches_intersection_brackets() {
        for r in (2..=240u64).step_by(2) {
            let n = frac(r as i64 + 1, 1);
            let x = dim_x().eval(r).unwrap();
            assert_eq!(&x + dim_y_plus().eval(r).unwrap() - &n, x_cap_y_plus().eval(r).unwrap());
            assert_eq!(&x + dim_y_minus().eval(r).unwrap() - &n, x_cap_y_minus().eval(r).unwrap());
            let ns = frac(r as i64 / 2 + 1, 1);
            let xs = dim_x_sym().eval(r).unwrap();
            assert_eq!(&xs + dim_y_plus_sym().eval(r).unwrap() - &ns, x_cap_y_plus_sym().eval(r).unwrap());
            assert_eq!(&xs + dim_y_minus_sym().eval(r).unwrap() - &ns, x_cap_y_minus_sym().eval(r).unwrap());
            assert_eq!(
                phi_one().eval(r).unwrap() + phi_minus_one().eval(r).unwrap(),
                phi_pm_sum().eval(r).unwrap()
            );
            assert_eq!(
                phi_sym_one().eval(r).unwrap() + phi_sym_minus_one().eval(r).unwrap(),
                phi_sym_pm_sum().eval(r).unwrap()
            );
        }
    }

    #[test]
    fn corollary_lengths_follow_from_multiplicities() {
        for r in (1..=199u64).step_by(2) {
            let len = frac((r as i64 + 1) / 2, 1) - phi_sym_zero().eval(r).unwrap();
            assert_eq!(len, corollary_odd().eval(r).unwrap(), "r = {r}");
        }
        for r in (2..=200u64).step_by(2) {
            let g = frac(r as i64 / 2 + 1, 1) - phi_sym_pm_sum().eval(r).unwrap();
            assert_eq!(g, corollary_even_affine().eval(r).unwrap(), "r = {r}");
            assert_eq!(&g + frac(2, 1), corollary_even().eval(r).unwrap(), "r = {r}");
        }
    }
}
