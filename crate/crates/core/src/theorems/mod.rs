//! Executable verifiers for consequences of the prime-ideal construction, and
//! brute-force ground truth over small finite rings.

pub mod coefficients;
pub mod matrix;
pub mod oracle;

pub use coefficients::{
    verify_invertible_coefficients, verify_nilpotent_coefficients, CoefficientReport,
    CoefficientStep,
};
pub use matrix::{matrix_not_surjective, MatrixCertificate};
pub use oracle::{BruteForceOracle, MAX_MODULUS};
