//! Exact checks of the predicted eigenvalue multiplicities of `Φ` and
//! `Φ_sym`, the eigenspace dimensions behind them, and diagonalizability.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    charpoly, eigen_multiplicity_with, kernel_basis, minpoly_with, nullity, rank, IntPolynomial,
    RationalMatrix,
};
use crate::periodic::{formulas, Parity, PeriodicFn};
use crate::poly::{operator_matrix, phi_matrix, Mat2, SymQuotient};

/// The multiplicities with a closed-form lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Quantity {
    PhiZero,
    PhiSymZero,
    PhiOne,
    PhiMinusOne,
    PhiPmSum,
    PhiSymOne,
    PhiSymMinusOne,
    PhiSymPmSum,
}

impl Quantity {
    pub fn for_parity(p: Parity) -> &'static [Quantity] {
        use Quantity::*;
        match p {
            Parity::Odd => &[PhiZero, PhiSymZero],
            Parity::Even => &[PhiOne, PhiMinusOne, PhiPmSum, PhiSymOne, PhiSymMinusOne, PhiSymPmSum],
        }
    }

    pub fn label(self) -> &'static str {
        use Quantity::*;
        match self {
            PhiZero => "m(Phi,0)",
            PhiSymZero => "m(Phi_sym,0)",
            PhiOne => "m(Phi,1)",
            PhiMinusOne => "m(Phi,-1)",
            PhiPmSum => "m(Phi,1)+m(Phi,-1)",
            PhiSymOne => "m(Phi_sym,1)",
            PhiSymMinusOne => "m(Phi_sym,-1)",
            PhiSymPmSum => "m(Phi_sym,1)+m(Phi_sym,-1)",
        }
    }

    pub fn formula(self) -> PeriodicFn {
        use Quantity::*;
        match self {
            PhiZero => formulas::phi_zero(),
            PhiSymZero => formulas::phi_sym_zero(),
            PhiOne => formulas::phi_one(),
            PhiMinusOne => formulas::phi_minus_one(),
            PhiPmSum => formulas::phi_pm_sum(),
            PhiSymOne => formulas::phi_sym_one(),
            PhiSymMinusOne => formulas::phi_sym_minus_one(),
            PhiSymPmSum => formulas::phi_sym_pm_sum(),
        }
    }
}

fn require_positive(r: u64) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidRange("r must be at least 1".into()));
    }
    Ok(())
}

/// Predicted lower bounds for degree `r`, in [`Quantity::for_parity`] order.
pub fn predicted_bounds(r: u64) -> Result<Vec<(Quantity, u64)>> {
    require_positive(r)?;
    Quantity::for_parity(Parity::of(r))
        .iter()
        .map(|&q| Ok((q, q.formula().eval_count(r)?)))
        .collect()
}

/// Substitution by `τ⁻¹σ = [[0,−1],[1,1]]`, which as an operator is the
/// composite `σ*` then `(τ⁻¹)*`. Its cube is `(−1)^r`.
pub fn rho_star(r: usize) -> RationalMatrix {
    let g = &Mat2::tau().inverse().expect("unimodular") * &Mat2::sigma();
    operator_matrix(&g, r)
}

/// Substitution by `ι = [[0,−1],[1,0]]`; an involution for even `r`.
pub fn iota_star(r: usize) -> RationalMatrix {
    operator_matrix(&Mat2::iota(), r)
}

/// `ρ*² + ρ* + 1`.
fn cube_root_part(rho: &RationalMatrix) -> RationalMatrix {
    let n = rho.rows();
    &(&(rho * rho) + rho) + &RationalMatrix::identity(n)
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Dimension of the image of `span(basis)` under `p`.
fn image_dim(p: &RationalMatrix, basis: &[Vec<BigRational>]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let cols = RationalMatrix::from_columns(p.cols(), basis);
    rank(&(p * &cols))
}

/// `dim(P·span(a) ∩ P·span(b))`.
fn image_intersection_dim(p: &RationalMatrix, a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> usize {
    let both: Vec<Vec<BigRational>> = a.iter().chain(b).cloned().collect();
    image_dim(p, a) + image_dim(p, b) - image_dim(p, &both)
}

/// Whether a dimension row asserts equality or a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">=")]
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub name: String,
    pub relation: Relation,
    pub predicted: u64,
    pub computed: u64,
    pub ok: bool,
}

impl DimensionRow {
    fn new(name: &str, relation: Relation, predicted: u64, computed: usize) -> Self {
        let computed = computed as u64;
        let ok = match relation {
            Relation::Equal => computed == predicted,
            Relation::AtLeast => computed >= predicted,
        };
        DimensionRow {
            name: name.to_string(),
            relation,
            predicted,
            computed,
            ok,
        }
    }
}

/// Eigenspace dimensions for even `r`.
///
/// `X = ker(ρ*² + ρ* + 1)`, `Y± = ker(ι* ∓ 1)`; the `_sym` spaces are their
/// images in the symmetric quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenDims {
    pub r: u64,
    pub x: DimensionRow,
    pub y_plus: DimensionRow,
    pub y_minus: DimensionRow,
    pub x_sym: DimensionRow,
    pub y_plus_sym: DimensionRow,
    pub y_minus_sym: DimensionRow,
    pub x_cap_y_plus: DimensionRow,
    pub x_cap_y_minus: DimensionRow,
    pub x_cap_y_plus_sym: DimensionRow,
    pub x_cap_y_minus_sym: DimensionRow,
    /// `dim X + dim ker(ρ* − 1)`, which must be `r + 1`.
    pub fixed_space_split: DimensionRow,
}

impl EvenDims {
    pub fn rows(&self) -> Vec<&DimensionRow> {
        vec![
            &self.x,
            &self.y_plus,
            &self.y_minus,
            &self.x_sym,
            &self.y_plus_sym,
            &self.y_minus_sym,
            &self.x_cap_y_plus,
            &self.x_cap_y_minus,
            &self.x_cap_y_plus_sym,
            &self.x_cap_y_minus_sym,
            &self.fixed_space_split,
        ]
    }
}

pub fn eigenspace_dims(r: u64) -> Result<EvenDims> {
    if r % 2 == 1 || r == 0 {
        return Err(Error::Parity {
            what: "eigenspace_dims",
            parity: "even positive",
            r,
        });
    }
    let n = r as usize;
    let rho = rho_star(n);
    let iota = iota_star(n);
    let one = BigRational::one();
    let cube = cube_root_part(&rho);
    let y_plus_op = iota.shifted(&one)?;
    let y_minus_op = iota.shifted(&-&one)?;

    let x = kernel_basis(&cube);
    let yp = kernel_basis(&y_plus_op);
    let ym = kernel_basis(&y_minus_op);
    let x_yp = nullity(&cube.vstack(&y_plus_op)?);
    let x_ym = nullity(&cube.vstack(&y_minus_op)?);
    let fixed = nullity(&rho.shifted(&one)?);

    let q = SymQuotient::new(n);
    let p = &q.projection;
    let f = |g: PeriodicFn| g.eval_count(r);
    use Relation::*;
    Ok(EvenDims {
        r,
        x: DimensionRow::new("dim X", Equal, f(formulas::dim_x())?, x.len()),
        y_plus: DimensionRow::new("dim Y+", Equal, f(formulas::dim_y_plus())?, yp.len()),
        y_minus: DimensionRow::new("dim Y-", Equal, f(formulas::dim_y_minus())?, ym.len()),
        x_sym: DimensionRow::new("dim X_sym", Equal, f(formulas::dim_x_sym())?, image_dim(p, &x)),
        y_plus_sym: DimensionRow::new(
            "dim Y+_sym",
            Equal,
            f(formulas::dim_y_plus_sym())?,
            image_dim(p, &yp),
        ),
        y_minus_sym: DimensionRow::new(
            "dim Y-_sym",
            Equal,
            f(formulas::dim_y_minus_sym())?,
            image_dim(p, &ym),
        ),
        x_cap_y_plus: DimensionRow::new("dim(X ∩ Y+)", AtLeast, f(formulas::x_cap_y_plus())?, x_yp),
        x_cap_y_minus: DimensionRow::new("dim(X ∩ Y-)", AtLeast, f(formulas::x_cap_y_minus())?, x_ym),
        x_cap_y_plus_sym: DimensionRow::new(
            "dim(X_sym ∩ Y+_sym)",
            AtLeast,
            f(formulas::x_cap_y_plus_sym())?,
            image_intersection_dim(p, &x, &yp),
        ),
        x_cap_y_minus_sym: DimensionRow::new(
            "dim(X_sym ∩ Y-_sym)",
            AtLeast,
            f(formulas::x_cap_y_minus_sym())?,
            image_intersection_dim(p, &x, &ym),
        ),
        fixed_space_split: DimensionRow::new("dim X + dim ker(rho*-1)", Equal, r + 1, x.len() + fixed),
    })
}

/// Dimensions for odd `r`, where `W = ker(ρ* + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddDims {
    pub r: u64,
    /// `#{a ∈ 0..=r : 2a ≡ r + 3 (mod 6)}`.
    pub residue_count: u64,
    /// The same set counted up to `a ~ r − a`.
    pub residue_orbits: u64,
    pub w: DimensionRow,
    pub w_sym: DimensionRow,
    /// Residue count against its closed form.
    pub count_formula: DimensionRow,
    pub orbit_formula: DimensionRow,
}

impl OddDims {
    pub fn rows(&self) -> Vec<&DimensionRow> {
        vec![&self.w, &self.w_sym, &self.count_formula, &self.orbit_formula]
    }
}

pub fn odd_case_dims(r: u64) -> Result<OddDims> {
    if r % 2 == 0 {
        return Err(Error::Parity {
            what: "odd_case_dims",
            parity: "odd",
            r,
        });
    }
    let hits: Vec<u64> = (0..=r).filter(|a| (2 * a) % 6 == (r + 3) % 6).collect();
    let count = hits.len() as u64;
    let mut orbits: Vec<u64> = hits.iter().map(|&a| a.min(r - a)).collect();
    orbits.sort_unstable();
    orbits.dedup();
    let orbit_count = orbits.len() as u64;

    let n = r as usize;
    let rho = rho_star(n);
    let w = kernel_basis(&rho.shifted(&-BigRational::one())?);
    let q = SymQuotient::new(n);
    let w_sym = image_dim(&q.projection, &w);
    Ok(OddDims {
        r,
        residue_count: count,
        residue_orbits: orbit_count,
        w: DimensionRow::new("dim W", Relation::Equal, count, w.len()),
        w_sym: DimensionRow::new("dim W_sym", Relation::Equal, orbit_count, w_sym),
        count_formula: DimensionRow::new(
            "residue count",
            Relation::Equal,
            formulas::phi_zero().eval_count(r)?,
            count as usize,
        ),
        orbit_formula: DimensionRow::new(
            "residue orbits",
            Relation::Equal,
            formulas::phi_sym_zero().eval_count(r)?,
            orbit_count as usize,
        ),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    /// Size of the kernel basis the identity was tested on.
    pub basis_size: usize,
    pub holds: bool,
}

fn kills_all(m: &RationalMatrix, basis: &[Vec<BigRational>]) -> bool {
    basis.iter().all(|v| m.mul_vec(v).iter().all(Zero::is_zero))
}

/// Odd `r`: `Φ` vanishes on `ker(ρ* + 1)`.
/// Even `r`: `Φ + ι*` vanishes on `ker(ρ*² + ρ* + 1)`.
pub fn check_annihilation_identities(r: u64) -> Result<Vec<IdentityCheck>> {
    require_positive(r)?;
    let n = r as usize;
    let phi = phi_matrix(n);
    let rho = rho_star(n);
    let check = if r % 2 == 1 {
        let w = kernel_basis(&rho.shifted(&-BigRational::one())?);
        IdentityCheck {
            name: "Phi v = 0 on ker(rho*+1)".into(),
            basis_size: w.len(),
            holds: kills_all(&phi, &w),
        }
    } else {
        let x = kernel_basis(&cube_root_part(&rho));
        IdentityCheck {
            name: "(Phi + iota*) v = 0 on ker(rho*^2+rho*+1)".into(),
            basis_size: x.len(),
            holds: kills_all(&(&phi + &iota_star(n)), &x),
        }
    };
    Ok(vec![check])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Diagonalizability {
    /// `a!(r−a)!·Φ_ab = b!(r−b)!·Φ_ba` for all `a, b`.
    pub symmetry_identity: bool,
    pub phi_minpoly_squarefree: bool,
    pub phi_sym_minpoly_squarefree: bool,
}

impl Diagonalizability {
    pub fn minpoly_squarefree(&self) -> bool {
        self.phi_minpoly_squarefree && self.phi_sym_minpoly_squarefree
    }

    pub fn holds(&self) -> bool {
        self.symmetry_identity && self.minpoly_squarefree()
    }
}

/// The weighted symmetry of `Φ`, checked in integers.
pub fn symmetry_identity(r: usize) -> bool {
    let phi = phi_matrix(r);
    let mut fact = vec![BigInt::one()];
    for k in 1..=r {
        let next = &fact[k - 1] * BigInt::from(k);
        fact.push(next);
    }
    let w: Vec<BigRational> = (0..=r)
        .map(|a| BigRational::from_integer(&fact[a] * &fact[r - a]))
        .collect();
    (0..=r).all(|a| (a..=r).all(|b| &w[a] * &phi[(a, b)] == &w[b] * &phi[(b, a)]))
}

pub fn check_diagonalizability(r: u64) -> Result<Diagonalizability> {
    let n = r as usize;
    let phi = phi_matrix(n);
    let sym = SymQuotient::new(n);
    Ok(Diagonalizability {
        symmetry_identity: symmetry_identity(n),
        phi_minpoly_squarefree: minpoly_with(&phi, &charpoly(&phi)?)?.is_squarefree()?,
        phi_sym_minpoly_squarefree: minpoly_with(&sym.phi_sym, &charpoly(&sym.phi_sym)?)?
            .is_squarefree()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityCheck {
    pub quantity: Quantity,
    pub label: String,
    pub predicted: u64,
    pub geometric: u64,
    pub algebraic: u64,
    /// `geometric >= predicted`.
    pub holds: bool,
    /// `geometric == algebraic == predicted`.
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub r: u64,
    pub parity: Parity,
    pub multiplicities: Vec<MultiplicityCheck>,
    pub diagonalizability: Diagonalizability,
    pub dimensions: Vec<DimensionRow>,
    pub identities: Vec<IdentityCheck>,
}

impl VerificationReport {
    pub fn bounds_hold(&self) -> bool {
        self.multiplicities.iter().all(|m| m.holds)
    }

    pub fn all_equal(&self) -> bool {
        self.multiplicities.iter().all(|m| m.equal)
    }

    pub fn geometric_equals_algebraic(&self) -> bool {
        self.multiplicities.iter().all(|m| m.geometric == m.algebraic)
    }

    pub fn dimensions_ok(&self) -> bool {
        self.dimensions.iter().all(|d| d.ok)
    }

    pub fn identities_hold(&self) -> bool {
        self.identities.iter().all(|i| i.holds)
    }

    /// Every check in the report passed.
    pub fn passed(&self) -> bool {
        self.bounds_hold()
            && self.all_equal()
            && self.diagonalizability.holds()
            && self.dimensions_ok()
            && self.identities_hold()
    }

    pub fn multiplicity(&self, q: Quantity) -> Option<&MultiplicityCheck> {
        self.multiplicities.iter().find(|m| m.quantity == q)
    }
}

/// Geometric and algebraic multiplicities of `m` at `λ`.
fn mult(m: &RationalMatrix, cp: &IntPolynomial, lambda: i64) -> Result<(u64, u64)> {
    let k = eigen_multiplicity_with(m, cp, &int(lambda))?;
    Ok((k.geometric as u64, k.algebraic as u64))
}

/// Runs every check for one degree.
pub fn verify(r: u64) -> Result<VerificationReport> {
    require_positive(r)?;
    let n = r as usize;
    let phi = phi_matrix(n);
    let sym = SymQuotient::new(n);
    let cp = charpoly(&phi)?;
    let cp_sym = charpoly(&sym.phi_sym)?;

    let measured = |q: Quantity| -> Result<(u64, u64)> {
        use Quantity::*;
        Ok(match q {
            PhiZero => mult(&phi, &cp, 0)?,
            PhiSymZero => mult(&sym.phi_sym, &cp_sym, 0)?,
            PhiOne => mult(&phi, &cp, 1)?,
            PhiMinusOne => mult(&phi, &cp, -1)?,
            PhiSymOne => mult(&sym.phi_sym, &cp_sym, 1)?,
            PhiSymMinusOne => mult(&sym.phi_sym, &cp_sym, -1)?,
            PhiPmSum | PhiSymPmSum => unreachable!("sums are assembled below"),
        })
    };

    let mut multiplicities = Vec::new();
    for (q, predicted) in predicted_bounds(r)? {
        let (geometric, algebraic) = match q {
            Quantity::PhiPmSum => {
                let (g1, a1) = measured(Quantity::PhiOne)?;
                let (g2, a2) = measured(Quantity::PhiMinusOne)?;
                (g1 + g2, a1 + a2)
            }
            Quantity::PhiSymPmSum => {
                let (g1, a1) = measured(Quantity::PhiSymOne)?;
                let (g2, a2) = measured(Quantity::PhiSymMinusOne)?;
                (g1 + g2, a1 + a2)
            }
            _ => measured(q)?,
        };
        multiplicities.push(MultiplicityCheck {
            quantity: q,
            label: q.label().to_string(),
            predicted,
            geometric,
            algebraic,
            holds: geometric >= predicted,
            equal: geometric == predicted && algebraic == predicted,
        });
    }

    let diagonalizability = Diagonalizability {
        symmetry_identity: symmetry_identity(n),
        phi_minpoly_squarefree: minpoly_with(&phi, &cp)?.is_squarefree()?,
        phi_sym_minpoly_squarefree: minpoly_with(&sym.phi_sym, &cp_sym)?.is_squarefree()?,
    };

    let dimensions = if r % 2 == 0 {
        eigenspace_dims(r)?.rows().into_iter().cloned().collect()
    } else {
        odd_case_dims(r)?.rows().into_iter().cloned().collect()
    };

    Ok(VerificationReport {
        r,
        parity: Parity::of(r),
        multiplicities,
        diagonalizability,
        dimensions,
        identities: check_annihilation_identities(r)?,
    })
}

/// One report per `r` in `r_min..=r_max`, computed in parallel and returned
/// in increasing `r`.
pub fn verify_range(r_min: u64, r_max: u64) -> Result<Vec<VerificationReport>> {
    if r_min < 1 || r_min > r_max {
        return Err(Error::InvalidRange(format!(
            "need 1 <= r_min <= r_max, got {r_min}..{r_max}"
        )));
    }
    // large r dominate the cost, so schedule them first
    let mut rs: Vec<u64> = (r_min..=r_max).rev().collect();
    let mut reports: Vec<VerificationReport> =
        rs.par_drain(..).map(verify).collect::<Result<_>>()?;
    reports.sort_by_key(|rep| rep.r);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kernel_basis;

    fn q(v: i64) -> BigRational {
        int(v)
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(
            predicted_bounds(3).unwrap(),
            vec![(Quantity::PhiZero, 2), (Quantity::PhiSymZero, 1)]
        );
        let b2 = predicted_bounds(2).unwrap();
        assert_eq!(b2[0], (Quantity::PhiOne, 1));
        assert_eq!(b2[1], (Quantity::PhiMinusOne, 0));
        assert_eq!(predicted_bounds(1).unwrap()[0], (Quantity::PhiZero, 0));
        assert!(predicted_bounds(0).is_err());
    }

    #[test]
    fn phi_sym_at_one_has_no_kernel() {
        let s = SymQuotient::new(1);
        assert_eq!(s.phi_sym, RationalMatrix::from_i64_rows(&[&[3]]));
        assert_eq!(nullity(&s.phi_sym), 0);
    }

    #[test]
    fn rho_and_iota_orders() {
        for r in 1..=16usize {
            let rho = rho_star(r);
            let id = RationalMatrix::identity(r + 1);
            let cube = rho.pow(3).unwrap();
            let sign = if r % 2 == 0 { q(1) } else { q(-1) };
            assert_eq!(cube, RationalMatrix::scalar(r + 1, &sign), "r = {r}");
            let i2 = iota_star(r).pow(2).unwrap();
            assert_eq!(i2, RationalMatrix::scalar(r + 1, &sign));
            assert_ne!(rho, id);
        }
    }

    #[test]
    fn even_dims_r2() {
        let d = eigenspace_dims(2).unwrap();
        assert_eq!((d.x.computed, d.y_plus.computed, d.y_minus.computed), (2, 1, 2));
        assert_eq!((d.x.predicted, d.y_plus.predicted, d.y_minus.predicted), (2, 1, 2));
        assert_eq!(d.x_cap_y_minus.predicted, 1);
        assert!(d.x_cap_y_minus.computed >= 1);
        assert!(d.rows().iter().all(|row| row.ok), "{d:#?}");
        // Y+ is spanned by x² + y²
        let yp = kernel_basis(&iota_star(2).shifted(&q(1)).unwrap());
        assert_eq!(yp, vec![vec![q(1), q(0), q(1)]]);
    }

    #[test]
    fn odd_dims_examples() {
        let d = odd_case_dims(3).unwrap();
        assert_eq!((d.residue_count, d.w.computed), (2, 2));
        assert_eq!(odd_case_dims(1).unwrap().residue_count, 0);
        assert_eq!(odd_case_dims(9).unwrap().residue_count, 4);
        for r in (1..=31).step_by(2) {
            let d = odd_case_dims(r).unwrap();
            assert!(d.rows().iter().all(|row| row.ok), "{d:#?}");
        }
        assert!(odd_case_dims(4).is_err());
        assert!(eigenspace_dims(3).is_err());
        assert!(eigenspace_dims(0).is_err());
    }

    #[test]
    fn even_dims_small_range() {
        for r in (2..=24).step_by(2) {
            let d = eigenspace_dims(r).unwrap();
            for row in d.rows() {
                assert!(row.ok, "r = {r}: {row:?}");
            }
        }
    }

    #[test]
    fn w_is_the_kernel_of_phi_at_three() {
        let w = kernel_basis(&rho_star(3).shifted(&q(-1)).unwrap());
        let k = kernel_basis(&phi_matrix(3));
        let span = |vs: &[Vec<BigRational>]| rank(&RationalMatrix::from_columns(4, vs));
        let both: Vec<_> = w.iter().chain(&k).cloned().collect();
        assert_eq!(span(&w), 2);
        assert_eq!(span(&both), 2);
    }

    #[test]
    fn identities() {
        for r in 1..=20 {
            let c = check_annihilation_identities(r).unwrap();
            assert!(c.iter().all(|c| c.holds), "r = {r}: {c:?}");
        }
        assert_eq!(check_annihilation_identities(1).unwrap()[0].basis_size, 0);
        assert_eq!(check_annihilation_identities(2).unwrap()[0].basis_size, 2);
        assert_eq!(check_annihilation_identities(3).unwrap()[0].basis_size, 2);
    }

    #[test]
    fn literal_rho_matrix_is_not_the_operator() {
        // substituting by [[1,−1],[1,0]] itself does not give a space Φ kills
        let lit = operator_matrix(&Mat2::rho(), 3);
        let w = kernel_basis(&lit.shifted(&q(-1)).unwrap());
        assert!(!kills_all(&phi_matrix(3), &w));
    }

    #[test]
    fn symmetry_example() {
        // r = 3, (a, b) = (0, 1): 0!·3!·Φ_01 = 6 = 1!·2!·Φ_10
        let phi = phi_matrix(3);
        assert_eq!(phi[(0, 1)], q(1));
        assert_eq!(phi[(1, 0)], q(3));
        assert!(symmetry_identity(0));
        assert!(symmetry_identity(3));
        // a perturbed Φ breaks it
        let mut bad = phi_matrix(4);
        bad[(0, 1)] = &bad[(0, 1)] + q(1);
        let fact = [1, 1, 2, 6, 24];
        let lhs = q(fact[0] * fact[4]) * &bad[(0, 1)];
        let rhs = q(fact[1] * fact[3]) * &bad[(1, 0)];
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn diagonalizable_examples() {
        for r in [0, 1, 2, 3, 20] {
            let d = check_diagonalizability(r).unwrap();
            assert!(d.holds(), "r = {r}: {d:?}");
        }
    }

    #[test]
    fn reports_small() {
        let r3 = verify(3).unwrap();
        let m = r3.multiplicity(Quantity::PhiZero).unwrap();
        assert_eq!((m.predicted, m.geometric, m.algebraic, m.equal), (2, 2, 2, true));
        let r2 = verify(2).unwrap();
        let p = r2.multiplicity(Quantity::PhiOne).unwrap();
        assert_eq!((p.predicted, p.geometric), (1, 1));
        let n = r2.multiplicity(Quantity::PhiMinusOne).unwrap();
        assert_eq!((n.predicted, n.geometric), (0, 0));
        assert_eq!(r3.multiplicities.len(), 2);
        assert_eq!(r2.multiplicities.len(), 6);
    }

    #[test]
    fn range_is_sorted_and_passes() {
        let reps = verify_range(1, 14).unwrap();
        assert_eq!(reps.iter().map(|r| r.r).collect::<Vec<_>>(), (1..=14).collect::<Vec<_>>());
        for rep in &reps {
            assert!(rep.passed(), "{rep:#?}");
        }
        assert!(verify_range(0, 3).is_err());
        assert!(verify_range(5, 4).is_err());
    }
}
