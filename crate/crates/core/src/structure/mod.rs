//! Idempotents of a finite meadow and its decomposition into Galois fields.
//!
//! An idempotent here is a NONZERO `e` with `e·e = e`, ordered by
//! `e ≤ f ⟺ e·f = e`. The minimal idempotents `e₁, …, eₙ` are pairwise
//! orthogonal and sum to 1, each `eᵢ·M` is a field, and
//! `h(m) = (e₁·m, …, eₙ·m)` is an isomorphism `M → e₁·M × ⋯ × eₙ·M`.

mod signature;

pub use signature::{PrimePower, Signature};

use thiserror::Error;

use crate::arith::{is_prime, log_exact};
use crate::meadow::{Meadow, MeadowError};
use crate::ring::{Elem, FiniteCommRing, RingError, RingOps};

/// Above this order [`decompose`] checks `h` on a sample of pairs instead of
/// all of them.
pub const MAX_HOM_CHECK_ORDER: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{0} is not a nonzero idempotent")]
    NotIdempotent(Elem),
    #[error("not a field: {0}")]
    NotAField(String),
    #[error("field order {order} is not a power of its characteristic {characteristic}")]
    NotPrimePower { order: usize, characteristic: u64 },
    #[error("internal verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Meadow(#[from] MeadowError),
}

/// A nonzero element `e` with `e·e = e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Idempotent(Elem);

impl Idempotent {
    pub fn new<R: RingOps + ?Sized>(r: &R, e: Elem) -> Result<Self, StructureError> {
        if r.contains(e) && e != r.zero() && r.mul(e, e) == e {
            Ok(Idempotent(e))
        } else {
            Err(StructureError::NotIdempotent(e))
        }
    }

    pub fn elem(self) -> Elem {
        self.0
    }
}

/// All idempotents in ascending carrier order.
pub fn idempotents(m: &Meadow) -> Vec<Idempotent> {
    m.elements()
        .filter(|&e| e != m.zero() && m.mul(e, e) == e)
        .map(Idempotent)
        .collect()
}

/// `e ≤ f`, i.e. `e·f = e`. Both arguments must be idempotents.
pub fn idem_leq(m: &Meadow, e: Elem, f: Elem) -> Result<bool, StructureError> {
    let e = Idempotent::new(m, e)?;
    let f = Idempotent::new(m, f)?;
    Ok(m.mul(e.0, f.0) == e.0)
}

/// The ≤-minimal idempotents in ascending carrier order. Empty for the zero ring.
pub fn minimal_idempotents(m: &Meadow) -> Vec<Idempotent> {
    let all = idempotents(m);
    all.iter()
        .copied()
        .filter(|e| all.iter().all(|f| f == e || m.mul(f.0, e.0) != f.0))
        .collect()
}

/// The meadow `e·M` with identity `e`. Its inverse is inherited from `M`.
pub fn component(m: &Meadow, e: Elem) -> Result<Meadow, StructureError> {
    let e = Idempotent::new(m, e)?;
    let ring = m.ring().principal_ideal(e.0)?;
    let ideal = ring.as_ideal().expect("principal ideal");
    let inv = ideal
        .members()
        .iter()
        .map(|&x| {
            ideal.local(m.inv(x)).ok_or_else(|| {
                StructureError::Verification(format!("inverse of {x} leaves {}·M", e.0))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Meadow::from_inverse_map(ring, inv)?)
}

/// Identifies a finite field as `GF(p^k)`.
///
/// The characteristic is the additive order of 1, found by repeated addition.
pub fn identify_field(f: &Meadow) -> Result<PrimePower, StructureError> {
    if f.order() < 2 {
        return Err(StructureError::NotAField("the zero ring has 0 = 1".into()));
    }
    if let Some(x) = f.elements().find(|&x| x != f.zero() && !f.is_invertible(x)) {
        return Err(StructureError::NotAField(format!("{x}·{x}⁻¹ ≠ 1")));
    }
    let one = f.one();
    let mut acc = one;
    let mut characteristic = 1u64;
    while acc != f.zero() {
        acc = f.add(acc, one);
        characteristic += 1;
    }
    if !is_prime(characteristic) {
        return Err(StructureError::NotAField(format!(
            "characteristic {characteristic} is not prime"
        )));
    }
    let k = log_exact(f.order() as u64, characteristic).ok_or(StructureError::NotPrimePower {
        order: f.order(),
        characteristic,
    })?;
    Ok(PrimePower::new(characteristic, k))
}

/// How thoroughly [`decompose`] verified the homomorphism property of `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomCheck {
    /// Every pair of elements.
    Exhaustive,
    /// Every element paired with a fixed sample of this many elements.
    Sampled(usize),
}

/// The decomposition `M ≅ e₁·M × ⋯ × eₙ·M`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub minimals: Vec<Idempotent>,
    pub components: Vec<Meadow>,
    pub fields: Vec<PrimePower>,
    /// The product ring `e₁·M × ⋯ × eₙ·M` (`Z/1Z` when there are no factors).
    pub product: FiniteCommRing,
    /// `h[m]` is the image of `m` in `product`.
    pub h: Vec<Elem>,
    pub h_inv: Vec<Elem>,
    pub hom_check: HomCheck,
}

impl Decomposition {
    pub fn signature(&self) -> Signature {
        Signature::new(self.fields.clone())
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.h[x.0]
    }

    /// Generalized inverse in the product, taken componentwise.
    pub fn product_inverse(&self, y: Elem) -> Elem {
        match self.product.as_product() {
            Some(p) => {
                let parts: Vec<Elem> = p
                    .components(y)
                    .into_iter()
                    .zip(&self.components)
                    .map(|(c, m)| m.inv(c))
                    .collect();
                p.compose(&parts)
            }
            None if self.components.len() == 1 => self.components[0].inv(y),
            None => y,
        }
    }
}

/// Decomposes a finite meadow along its minimal idempotents and verifies the
/// resulting isomorphism.
///
/// Any failed check is reported as [`StructureError::Verification`]; for a
/// genuine meadow none can fail.
pub fn decompose(m: &Meadow) -> Result<Decomposition, StructureError> {
    let minimals = minimal_idempotents(m);
    let fail = |msg: String| Err(StructureError::Verification(msg));

    for (i, e) in minimals.iter().enumerate() {
        for f in &minimals[i + 1..] {
            if m.mul(e.0, f.0) != m.zero() {
                return fail(format!(
                    "minimal idempotents {} and {} are not orthogonal",
                    e.0, f.0
                ));
            }
        }
    }
    let sum = minimals.iter().fold(m.zero(), |acc, e| m.add(acc, e.0));
    if sum != m.one() {
        return fail(format!("minimal idempotents sum to {sum}, not 1"));
    }

    let components = minimals
        .iter()
        .map(|e| component(m, e.0))
        .collect::<Result<Vec<_>, _>>()?;
    let fields = components
        .iter()
        .map(identify_field)
        .collect::<Result<Vec<_>, _>>()?;

    let product = match components.len() {
        0 => FiniteCommRing::zmod(1)?,
        1 => components[0].ring().clone(),
        _ => FiniteCommRing::product_within(
            components.iter().map(|c| c.ring().clone()).collect(),
            m.order(),
        )?,
    };
    if product.order() != m.order() {
        return fail(format!(
            "product of components has order {}, meadow has order {}",
            product.order(),
            m.order()
        ));
    }

    let image = |x: Elem| -> Elem {
        let parts: Vec<Elem> = minimals
            .iter()
            .zip(&components)
            .map(|(e, c)| {
                let ideal = c.ring().as_ideal().expect("component is an ideal");
                ideal.local(m.mul(e.0, x)).expect("e·x lies in e·M")
            })
            .collect();
        match product.as_product() {
            Some(p) => p.compose(&parts),
            None => parts.first().copied().unwrap_or(Elem(0)),
        }
    };
    let h: Vec<Elem> = m.elements().map(image).collect();
    let mut h_inv = vec![None; m.order()];
    for (x, &y) in h.iter().enumerate() {
        if let Some(prev) = h_inv[y.0] {
            return fail(format!("h is not injective: h({prev}) = h({x}) = {y}"));
        }
        h_inv[y.0] = Some(x);
    }
    let h_inv: Vec<Elem> = h_inv
        .into_iter()
        .map(|x| Elem(x.expect("injective on equal sizes")))
        .collect();

    let mut decomposition = Decomposition {
        minimals,
        components,
        fields,
        product,
        h,
        h_inv,
        hom_check: HomCheck::Exhaustive,
    };
    decomposition.hom_check = verify_homomorphism(m, &decomposition)?;
    Ok(decomposition)
}

fn verify_homomorphism(m: &Meadow, d: &Decomposition) -> Result<HomCheck, StructureError> {
    let p = &d.product;
    let h = |x: Elem| d.h[x.0];
    let fail = |msg: String| Err(StructureError::Verification(msg));
    if h(m.zero()) != p.zero() {
        return fail("h(0) ≠ 0".into());
    }
    if h(m.one()) != p.one() {
        return fail("h(1) ≠ 1".into());
    }
    for x in m.elements() {
        if h(m.inv(x)) != d.product_inverse(h(x)) {
            return fail(format!("h({x}⁻¹) ≠ h({x})⁻¹"));
        }
    }
    let (others, check): (Vec<Elem>, HomCheck) = if m.order() <= MAX_HOM_CHECK_ORDER {
        (m.elements().collect(), HomCheck::Exhaustive)
    } else {
        let stride = m.order().div_ceil(64);
        let sample: Vec<Elem> = m.elements().step_by(stride).collect();
        let n = sample.len();
        (sample, HomCheck::Sampled(n))
    };
    for x in m.elements() {
        for &y in &others {
            if h(m.add(x, y)) != p.add(h(x), h(y)) {
                return fail(format!("h({x} + {y}) ≠ h({x}) + h({y})"));
            }
            if h(m.mul(x, y)) != p.mul(h(x), h(y)) {
                return fail(format!("h({x}·{y}) ≠ h({x})·h({y})"));
            }
        }
    }
    Ok(check)
}

/// Sorted field orders of the decomposition.
pub fn signature(m: &Meadow) -> Result<Signature, StructureError> {
    let sig = decompose(m)?.signature();
    if sig.order() != m.order() as u64 {
        return Err(StructureError::Verification(format!(
            "signature {} has order {}, meadow has order {}",
            sig,
            sig.order(),
            m.order()
        )));
    }
    Ok(sig)
}

/// Decided by comparing signatures.
pub fn is_isomorphic(a: &Meadow, b: &Meadow) -> Result<bool, StructureError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    Ok(signature(a)? == signature(b)?)
}

/// True iff `m` has no proper submeadow, i.e. it is a product of pairwise
/// distinct prime fields.
pub fn is_minimal_meadow(m: &Meadow) -> Result<bool, StructureError> {
    Ok(signature(m)?.is_minimal())
}
