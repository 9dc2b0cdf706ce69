//! Finite commutative rings, generalized inverses, and finite meadows.
//!
//! A meadow is a commutative ring with a total inverse operation satisfying
//! `0⁻¹ = 0`, where `x⁻¹` is the unique `y` with `x·x·y = x` and `y·y·x = y`.
//! Every finite meadow is a product of Galois fields, and this crate computes
//! that decomposition for concrete rings:
//!
//! ```
//! use meadow_core::{ring::FiniteCommRing, meadow::Meadow, structure::signature};
//!
//! let m = Meadow::new(FiniteCommRing::zmod(10).unwrap()).unwrap();
//! assert_eq!(signature(&m).unwrap().to_string(), "GF(2) x GF(5)");
//! ```

pub mod arith;
pub mod catalog;
pub mod counting;
pub mod meadow;
pub mod polyfield;
pub mod ring;
pub mod structure;

pub use meadow::{Meadow, MeadowError};
pub use ring::{Elem, FiniteCommRing, RingError, RingOps};
pub use structure::{PrimePower, Signature};
