//! Polynomial arithmetic over prime fields and construction of `GF(p^n)`.

mod field;
mod poly;

pub use field::{smallest_irreducible, GaloisField};
pub use poly::Polynomial;

use thiserror::Error;

/// Largest carrier admitted for structured rings (fields, `Z/nZ`, products).
pub const MAX_STRUCTURED_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("coefficient moduli differ: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("reduction modulus must be monic")]
    NonMonicModulus,
    #[error("reduction modulus must have degree at least 1")]
    ConstantModulus,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{n}) exceeds the carrier bound of {limit} elements")]
    OrderTooLarge { p: u64, n: u32, limit: usize },
}
