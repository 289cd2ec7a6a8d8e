//! Exact linear algebra over the rationals.

mod charpoly;
pub mod elim;
mod matrix;
mod polynomial;

pub use charpoly::{
    annihilates, charpoly, eigen_multiplicity, eigen_multiplicity_with, krylov_minpoly, minpoly,
    minpoly_by_matrix_powers, minpoly_with, Multiplicity,
};
pub use elim::{kernel_basis, nullity, rank, solve};
pub use matrix::RationalMatrix;
pub use polynomial::IntPolynomial;
