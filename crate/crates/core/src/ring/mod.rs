//! Finite commutative rings behind one carrier-indexed interface.
//!
//! Every ring has carrier `{0, .., order-1}` and elements are plain indices
//! ([`Elem`]). Four constructors are provided: `Z/nZ`, Galois fields, direct
//! products, and rings loaded from explicit operation tables. A fifth kind,
//! the principal ideal `e·R` of an idempotent `e`, is a ring in its own right
//! with identity `e` and is what the decomposition machinery builds on.

mod axioms;
mod table;
pub mod text;

pub use axioms::{check_axioms, AxiomReport, Law, LawResult, MAX_CHECK_ORDER};
pub use table::{load_ring, load_ring_within, RingSpec, TableAlgebra, MAX_TABLE_ORDER};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::polyfield::{GaloisField, PolyError, MAX_STRUCTURED_ORDER};

/// An element of a finite ring, identified by its carrier index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("order {order} is outside the admitted range 1..={limit}")]
    OrderOutOfBounds { order: u64, limit: usize },
    #[error("a direct product needs at least one factor")]
    EmptyProduct,
    #[error(transparent)]
    Field(#[from] PolyError),
    #[error("{table} table has {found} entries, expected {expected}")]
    TableShape {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{table} table is not closed: {table}({x}, {y}) = {value} is outside the carrier")]
    NotClosed {
        table: &'static str,
        x: usize,
        y: usize,
        value: usize,
    },
    #[error("{name} index {index} is outside the carrier of order {order}")]
    ConstantOutOfRange {
        name: &'static str,
        index: usize,
        order: usize,
    },
    #[error("axiom {} {} fails at {}", law.label(), law.equation(), fmt_witness(witness))]
    AxiomViolation { law: Law, witness: Vec<Elem> },
    #[error("{0} is not a nonzero idempotent")]
    NotIdempotent(Elem),
    #[error("exhaustive checks are limited to order {limit}, ring has order {order}")]
    TooLargeForCheck { order: usize, limit: usize },
}

pub(crate) fn fmt_witness(w: &[Elem]) -> String {
    let parts: Vec<String> = w.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Operations shared by every finite ring-like structure in the crate.
///
/// Implementors need not be commutative: the skew checks run against
/// [`TableAlgebra`] values whose multiplication may not commute.
pub trait RingOps {
    fn order(&self) -> usize;
    fn zero(&self) -> Elem;
    fn one(&self) -> Elem;
    fn add(&self, a: Elem, b: Elem) -> Elem;
    fn mul(&self, a: Elem, b: Elem) -> Elem;
    fn neg(&self, a: Elem) -> Elem;

    fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    fn elements(&self) -> Elements {
        Elements(0..self.order())
    }

    fn contains(&self, x: Elem) -> bool {
        x.0 < self.order()
    }

    fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let (mut base, mut acc) = (x, self.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x + x + ... + x` (`k` terms).
    fn times(&self, x: Elem, k: u64) -> Elem {
        (0..k).fold(self.zero(), |acc, _| self.add(acc, x))
    }
}

/// Iterator over a carrier in index order.
#[derive(Clone, Debug)]
pub struct Elements(std::ops::Range<usize>);

impl Iterator for Elements {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        self.0.next().map(Elem)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.0.size_hint()
    }
}

impl DoubleEndedIterator for Elements {
    fn next_back(&mut self) -> Option<Elem> {
        self.0.next_back().map(Elem)
    }
}

impl ExactSizeIterator for Elements {}

/// A finite commutative ring with identity.
///
/// Cheap to clone: the operation data sits behind an `Arc`.
#[derive(Clone, Debug)]
pub struct FiniteCommRing {
    order: usize,
    zero: Elem,
    one: Elem,
    kind: Arc<RingKind>,
}

#[derive(Debug)]
pub enum RingKind {
    Zmod(u64),
    Galois(GaloisField),
    Product(Product),
    Table(TableAlgebra),
    Ideal(Ideal),
}

/// Direct product of rings. Carrier index is the mixed-radix rank of the
/// component tuple, first factor most significant.
#[derive(Debug)]
pub struct Product {
    factors: Vec<FiniteCommRing>,
    strides: Vec<usize>,
}

impl Product {
    pub fn factors(&self) -> &[FiniteCommRing] {
        &self.factors
    }

    /// The `i`-th component of `x`.
    pub fn project(&self, x: Elem, i: usize) -> Elem {
        Elem((x.0 / self.strides[i]) % self.factors[i].order)
    }

    pub fn components(&self, x: Elem) -> Vec<Elem> {
        (0..self.factors.len())
            .map(|i| self.project(x, i))
            .collect()
    }

    /// Inverse of [`Product::components`].
    pub fn compose(&self, parts: &[Elem]) -> Elem {
        debug_assert_eq!(parts.len(), self.factors.len());
        Elem(parts.iter().zip(&self.strides).map(|(c, s)| c.0 * s).sum())
    }

    fn zip_with(&self, a: Elem, b: Elem, op: impl Fn(&FiniteCommRing, Elem, Elem) -> Elem) -> Elem {
        let mut out = 0;
        for (i, f) in self.factors.iter().enumerate() {
            let c = op(f, self.project(a, i), self.project(b, i));
            out += c.0 * self.strides[i];
        }
        Elem(out)
    }
}

/// The principal ideal `e·R` of an idempotent `e`, a ring with identity `e`.
/// Members are indexed in ascending order of their index in the parent.
#[derive(Debug)]
pub struct Ideal {
    parent: FiniteCommRing,
    generator: Elem,
    members: Vec<Elem>,
    position: Vec<Option<usize>>,
}

impl Ideal {
    pub fn parent(&self) -> &FiniteCommRing {
        &self.parent
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    /// Parent-ring element for each local index.
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    /// Local index of a parent element, if it lies in the ideal.
    pub fn local(&self, parent_elem: Elem) -> Option<Elem> {
        self.position[parent_elem.0].map(Elem)
    }

    pub fn embed(&self, x: Elem) -> Elem {
        self.members[x.0]
    }

    fn lift(&self, a: Elem, b: Elem, op: impl Fn(&FiniteCommRing, Elem, Elem) -> Elem) -> Elem {
        let r = op(&self.parent, self.members[a.0], self.members[b.0]);
        self.local(r)
            .expect("principal ideal is closed under ring operations")
    }
}

impl FiniteCommRing {
    /// `Z/nZ` with the default carrier bound. `n = 1` gives the zero ring.
    pub fn zmod(n: u64) -> Result<Self, RingError> {
        Self::zmod_within(n, MAX_STRUCTURED_ORDER)
    }

    pub fn zmod_within(n: u64, limit: usize) -> Result<Self, RingError> {
        if n == 0 || n > limit as u64 {
            return Err(RingError::OrderOutOfBounds { order: n, limit });
        }
        Ok(FiniteCommRing {
            order: n as usize,
            zero: Elem(0),
            one: Elem(1 % n as usize),
            kind: Arc::new(RingKind::Zmod(n)),
        })
    }

    /// `GF(p^n)` with the default carrier bound.
    pub fn galois(p: u64, n: u32) -> Result<Self, RingError> {
        Self::galois_within(p, n, MAX_STRUCTURED_ORDER)
    }

    pub fn galois_within(p: u64, n: u32, limit: usize) -> Result<Self, RingError> {
        Ok(Self::from_field(GaloisField::with_limit(p, n, limit)?))
    }

    pub fn from_field(field: GaloisField) -> Self {
        FiniteCommRing {
            order: field.order(),
            zero: Elem(0),
            one: Elem(1),
            kind: Arc::new(RingKind::Galois(field)),
        }
    }

    /// Direct product with componentwise operations.
    pub fn product(factors: Vec<FiniteCommRing>) -> Result<Self, RingError> {
        Self::product_within(factors, MAX_STRUCTURED_ORDER)
    }

    pub fn product_within(factors: Vec<FiniteCommRing>, limit: usize) -> Result<Self, RingError> {
        if factors.is_empty() {
            return Err(RingError::EmptyProduct);
        }
        let order = factors
            .iter()
            .try_fold(1u64, |acc, f| acc.checked_mul(f.order as u64))
            .filter(|&o| o <= limit as u64)
            .ok_or_else(|| RingError::OrderOutOfBounds {
                order: factors
                    .iter()
                    .fold(1u64, |a, f| a.saturating_mul(f.order as u64)),
                limit,
            })? as usize;
        let mut strides = vec![1; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].order;
        }
        let product = Product { factors, strides };
        let zero = product.compose(&product.factors.iter().map(|f| f.zero).collect::<Vec<_>>());
        let one = product.compose(&product.factors.iter().map(|f| f.one).collect::<Vec<_>>());
        Ok(FiniteCommRing {
            order,
            zero,
            one,
            kind: Arc::new(RingKind::Product(product)),
        })
    }

    /// Wraps an already validated, commutative table algebra.
    pub(crate) fn from_tables(alg: TableAlgebra) -> Self {
        FiniteCommRing {
            order: alg.order(),
            zero: alg.zero(),
            one: alg.one(),
            kind: Arc::new(RingKind::Table(alg)),
        }
    }

    /// The ring `e·R` for a nonzero idempotent `e`, with identity `e`.
    pub fn principal_ideal(&self, e: Elem) -> Result<Self, RingError> {
        if !self.contains(e) || e == self.zero || self.mul(e, e) != e {
            return Err(RingError::NotIdempotent(e));
        }
        let mut position = vec![None; self.order];
        for m in self.elements() {
            let em = self.mul(e, m);
            position[em.0] = Some(0);
        }
        let members: Vec<Elem> = self
            .elements()
            .filter(|x| position[x.0].is_some())
            .collect();
        for (i, m) in members.iter().enumerate() {
            position[m.0] = Some(i);
        }
        let ideal = Ideal {
            parent: self.clone(),
            generator: e,
            position,
            members,
        };
        let zero = ideal.local(self.zero).expect("0 = e·0");
        let one = ideal.local(e).expect("e = e·1");
        Ok(FiniteCommRing {
            order: ideal.members.len(),
            zero,
            one,
            kind: Arc::new(RingKind::Ideal(ideal)),
        })
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn as_product(&self) -> Option<&Product> {
        match &*self.kind {
            RingKind::Product(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_ideal(&self) -> Option<&Ideal> {
        match &*self.kind {
            RingKind::Ideal(i) => Some(i),
            _ => None,
        }
    }

    /// The zero ring, where `0 = 1`.
    pub fn is_degenerate(&self) -> bool {
        self.order == 1
    }

    /// Materializes the operation tables.
    pub fn to_spec(&self) -> RingSpec {
        let n = self.order;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in self.elements() {
            for y in self.elements() {
                add.push(self.add(x, y).0);
                mul.push(self.mul(x, y).0);
            }
        }
        RingSpec {
            order: n,
            zero: self.zero.0,
            one: self.one.0,
            add,
            mul,
        }
    }

    /// Table-backed copy of this ring. Lookups are faster than the structured
    /// operations of deep products.
    pub fn materialize(&self) -> Self {
        let alg = TableAlgebra::from_ring(self);
        Self::from_tables(alg)
    }
}

impl RingOps for FiniteCommRing {
    fn order(&self) -> usize {
        self.order
    }

    fn zero(&self) -> Elem {
        self.zero
    }

    fn one(&self) -> Elem {
        self.one
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(
            a.0 < self.order && b.0 < self.order,
            "element from another ring"
        );
        match &*self.kind {
            RingKind::Zmod(n) => Elem(((a.0 as u64 + b.0 as u64) % n) as usize),
            RingKind::Galois(f) => Elem(f.add(a.0, b.0)),
            RingKind::Product(p) => p.zip_with(a, b, |f, x, y| f.add(x, y)),
            RingKind::Table(t) => t.add(a, b),
            RingKind::Ideal(i) => i.lift(a, b, |r, x, y| r.add(x, y)),
        }
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(
            a.0 < self.order && b.0 < self.order,
            "element from another ring"
        );
        match &*self.kind {
            RingKind::Zmod(n) => Elem(((a.0 as u64 * b.0 as u64) % n) as usize),
            RingKind::Galois(f) => Elem(f.mul(a.0, b.0)),
            RingKind::Product(p) => p.zip_with(a, b, |f, x, y| f.mul(x, y)),
            RingKind::Table(t) => t.mul(a, b),
            RingKind::Ideal(i) => i.lift(a, b, |r, x, y| r.mul(x, y)),
        }
    }

    fn neg(&self, a: Elem) -> Elem {
        debug_assert!(a.0 < self.order, "element from another ring");
        match &*self.kind {
            RingKind::Zmod(n) => Elem(((n - a.0 as u64) % n) as usize),
            RingKind::Galois(f) => Elem(f.neg(a.0)),
            RingKind::Product(p) => p.zip_with(a, a, |f, x, _| f.neg(x)),
            RingKind::Table(t) => t.neg(a),
            RingKind::Ideal(i) => i.lift(a, a, |r, x, _| r.neg(x)),
        }
    }
}

impl fmt::Display for FiniteCommRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.kind {
            RingKind::Zmod(n) => write!(f, "Z/{n}Z"),
            RingKind::Galois(g) if g.degree() == 1 => write!(f, "GF({})", g.characteristic()),
            RingKind::Galois(g) => write!(f, "GF({}^{})", g.characteristic(), g.degree()),
            RingKind::Product(p) => {
                let parts: Vec<String> = p.factors.iter().map(|r| r.to_string()).collect();
                write!(f, "({})", parts.join(" x "))
            }
            RingKind::Table(_) => write!(f, "table ring of order {}", self.order),
            RingKind::Ideal(i) => write!(f, "{}·({})", i.generator, i.parent),
        }
    }
}
