pub mod error;
pub mod linalg;
pub mod periodic;
pub mod poly;
pub mod recurrence;
pub mod report;
mod ser;
pub mod spectra;
pub mod stern;

pub use error::{Error, Result};

/// The big-number types used throughout the public API.
pub mod num {
    pub use num_bigint::{BigInt, BigUint};
    pub use num_rational::BigRational;
}
