//! Generalized inverses and meadows.
//!
//! The generalized inverse of `x` is the unique `y` with `x·x·y = x` and
//! `y·y·x = y`. It is found here by scanning the carrier, which works for any
//! table and doubles as an oracle for the closed forms (`x^(q-2)` in fields,
//! componentwise in products).

mod skew;

pub use skew::{is_skew_meadow, skew_inverse, MulTable};

use std::sync::Arc;

use thiserror::Error;

use crate::ring::{Elem, Elements, FiniteCommRing, RingError, RingOps};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeadowError {
    #[error("not a meadow: {witness} has no generalized inverse")]
    NotAMeadow { witness: Elem },
    #[error("inconsistent tables: {x} has two generalized inverses, {first} and {second}")]
    Inconsistent { x: Elem, first: Elem, second: Elem },
    #[error("supplied inverse map fails the defining equations at {x}")]
    InvalidInverse { x: Elem },
    #[error("multiplication table has no two-sided identity")]
    NoIdentity,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// The generalized inverse of `x`, or `None` if it has none.
///
/// A second solution means the tables are not a commutative ring; that is
/// reported as [`MeadowError::Inconsistent`].
pub fn generalized_inverse<R: RingOps + ?Sized>(
    r: &R,
    x: Elem,
) -> Result<Option<Elem>, MeadowError> {
    let xx = r.mul(x, x);
    let mut found: Option<Elem> = None;
    for y in r.elements() {
        if r.mul(xx, y) == x && r.mul(r.mul(y, y), x) == y {
            if let Some(first) = found {
                return Err(MeadowError::Inconsistent {
                    x,
                    first,
                    second: y,
                });
            }
            found = Some(y);
        }
    }
    Ok(found)
}

/// All `y` solving `x·x·y = x` that fail `y·y·x = y`.
pub fn pseudo_witnesses<R: RingOps + ?Sized>(r: &R, x: Elem) -> Vec<Elem> {
    let xx = r.mul(x, x);
    r.elements()
        .filter(|&y| r.mul(xx, y) == x && r.mul(r.mul(y, y), x) != y)
        .collect()
}

/// Outcome of [`to_meadow`]. A ring that is not a meadow is a legitimate
/// answer, not an error.
#[derive(Clone, Debug)]
pub enum Verdict {
    Meadow(Meadow),
    /// The lowest-index element without a generalized inverse.
    NotAMeadow {
        witness: Elem,
    },
}

impl Verdict {
    pub fn is_meadow(&self) -> bool {
        matches!(self, Verdict::Meadow(_))
    }

    pub fn into_meadow(self) -> Result<Meadow, MeadowError> {
        match self {
            Verdict::Meadow(m) => Ok(m),
            Verdict::NotAMeadow { witness } => Err(MeadowError::NotAMeadow { witness }),
        }
    }
}

/// Decides whether `ring` is a meadow, computing the full inverse map.
pub fn to_meadow(ring: &FiniteCommRing) -> Result<Verdict, MeadowError> {
    let mut inv = Vec::with_capacity(ring.order());
    for x in ring.elements() {
        match generalized_inverse(ring, x)? {
            Some(y) => inv.push(y),
            None => return Ok(Verdict::NotAMeadow { witness: x }),
        }
    }
    Ok(Verdict::Meadow(Meadow {
        ring: ring.clone(),
        inv: inv.into(),
    }))
}

/// A finite commutative ring together with its total generalized-inverse map.
#[derive(Clone, Debug)]
pub struct Meadow {
    ring: FiniteCommRing,
    inv: Arc<[Elem]>,
}

impl Meadow {
    /// The meadow on `ring`, or [`MeadowError::NotAMeadow`] naming the first
    /// element without a generalized inverse.
    pub fn new(ring: FiniteCommRing) -> Result<Self, MeadowError> {
        to_meadow(&ring)?.into_meadow()
    }

    /// Accepts a precomputed inverse map after checking both defining
    /// equations at every element. By uniqueness that makes it the
    /// generalized inverse.
    pub fn from_inverse_map(ring: FiniteCommRing, inv: Vec<Elem>) -> Result<Self, MeadowError> {
        if inv.len() != ring.order() {
            return Err(RingError::TableShape {
                table: "inverse",
                expected: ring.order(),
                found: inv.len(),
            }
            .into());
        }
        for x in ring.elements() {
            let y = inv[x.0];
            if !ring.contains(y)
                || ring.mul(ring.mul(x, x), y) != x
                || ring.mul(ring.mul(y, y), x) != y
            {
                return Err(MeadowError::InvalidInverse { x });
            }
        }
        Ok(Meadow {
            ring,
            inv: inv.into(),
        })
    }

    /// Direct product of meadows. The inverse map of the product ring is
    /// computed by scanning, like any other ring.
    pub fn product(factors: &[Meadow]) -> Result<Self, MeadowError> {
        let ring = FiniteCommRing::product(factors.iter().map(|m| m.ring.clone()).collect())?;
        Self::new(ring)
    }

    pub fn ring(&self) -> &FiniteCommRing {
        &self.ring
    }

    pub fn inv(&self, x: Elem) -> Elem {
        self.inv[x.0]
    }

    pub fn inverse_map(&self) -> &[Elem] {
        &self.inv
    }

    /// `(x, x⁻¹)` for every element in carrier order.
    pub fn inverse_table(&self) -> Vec<(Elem, Elem)> {
        self.elements().map(|x| (x, self.inv(x))).collect()
    }

    /// `x = x⁻¹`.
    pub fn is_self_inverse(&self, x: Elem) -> bool {
        self.inv(x) == x
    }

    /// `x·x⁻¹ = 1`.
    pub fn is_invertible(&self, x: Elem) -> bool {
        self.ring.mul(x, self.inv(x)) == self.ring.one()
    }

    /// Every nonzero element is invertible and `0 ≠ 1`.
    pub fn is_field(&self) -> bool {
        self.order() > 1
            && self
                .elements()
                .all(|x| x == self.zero() || self.is_invertible(x))
    }
}

impl RingOps for Meadow {
    fn order(&self) -> usize {
        self.ring.order()
    }

    fn zero(&self) -> Elem {
        self.ring.zero()
    }

    fn one(&self) -> Elem {
        self.ring.one()
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.ring.add(a, b)
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.ring.mul(a, b)
    }

    fn neg(&self, a: Elem) -> Elem {
        self.ring.neg(a)
    }

    fn elements(&self) -> Elements {
        self.ring.elements()
    }
}
