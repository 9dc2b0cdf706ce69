use std::fmt;

use crate::polyfield::MAX_STRUCTURED_ORDER;
use crate::ring::{FiniteCommRing, RingError};

/// The order `p^k` of a Galois field, kept as the pair `(p, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    pub p: u64,
    pub k: u32,
}

impl PrimePower {
    pub fn new(p: u64, k: u32) -> Self {
        PrimePower { p, k }
    }

    pub fn order(self) -> u64 {
        self.p.pow(self.k)
    }
}

impl fmt::Display for PrimePower {
    /// `GF(q)` with `q = p^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

/// Multiset of field orders in the decomposition of a finite meadow, sorted
/// ascending by `(p, k)`. Two finite meadows are isomorphic exactly when their
/// signatures are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature(Vec<PrimePower>);

impl Signature {
    pub fn new(mut parts: Vec<PrimePower>) -> Self {
        parts.sort();
        Signature(parts)
    }

    pub fn parts(&self) -> &[PrimePower] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// The empty signature belongs to the zero ring.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of the field orders.
    pub fn order(&self) -> u64 {
        self.0.iter().map(|pp| pp.order()).product()
    }

    /// Number of factors of characteristic 2, where `1 = −1`.
    pub fn char2_count(&self) -> usize {
        self.0.iter().filter(|pp| pp.p == 2).count()
    }

    /// All exponents are 1 and the primes are pairwise distinct: the signature
    /// of a meadow without proper submeadows.
    pub fn is_minimal(&self) -> bool {
        self.0.iter().all(|pp| pp.k == 1) && self.0.windows(2).all(|w| w[0].p != w[1].p)
    }

    /// Pair notation, e.g. `{(2,1),(5,1)}`.
    pub fn pairs(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|pp| format!("({},{})", pp.p, pp.k))
            .collect();
        format!("{{{}}}", parts.join(","))
    }

    /// A concrete meadow with this signature: the product of the fields in
    /// signature order, the bare field for a single factor, and `Z/1Z` for
    /// the empty signature.
    pub fn instantiate(&self) -> Result<FiniteCommRing, RingError> {
        self.instantiate_within(MAX_STRUCTURED_ORDER)
    }

    pub fn instantiate_within(&self, limit: usize) -> Result<FiniteCommRing, RingError> {
        match self.0.as_slice() {
            [] => FiniteCommRing::zmod_within(1, limit),
            [pp] => FiniteCommRing::galois_within(pp.p, pp.k, limit),
            parts => {
                if self.order() > limit as u64 {
                    return Err(RingError::OrderOutOfBounds {
                        order: self.order(),
                        limit,
                    });
                }
                let fields = parts
                    .iter()
                    .map(|pp| FiniteCommRing::galois_within(pp.p, pp.k, limit))
                    .collect::<Result<Vec<_>, _>>()?;
                FiniteCommRing::product_within(fields, limit)
            }
        }
    }
}

impl fmt::Display for Signature {
    /// `GF(2) x GF(5)`; the zero ring prints as `trivial`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.0.iter().map(|pp| pp.to_string()).collect();
        write!(f, "{}", parts.join(" x "))
    }
}
