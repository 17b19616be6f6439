pub mod cli;
pub mod error;
pub mod format;
pub mod matrix;
pub mod numtheory;
pub mod oracle;
pub mod ring;
pub mod twin;

pub use error::{Error, Result};
pub use matrix::{diagonal_reduction, DiagonalReductionCertificate, Matrix};
pub use ring::{Element, GaloisField, RingDescriptor, DEFAULT_EXHAUSTION_BOUND};
pub use twin::{twin_decompose, two_sum_decompose, Method, TwinCertificate, TwoSumDecomposition};
