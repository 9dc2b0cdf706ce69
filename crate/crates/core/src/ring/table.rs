use super::axioms::{check_additive_prefix, check_axioms, Law};
use super::{Elem, FiniteCommRing, RingError, RingOps};

/// Largest carrier admitted for rings loaded from explicit tables.
pub const MAX_TABLE_ORDER: usize = 512;

/// Raw operation tables of a finite ring, row-major, `order × order` each.
///
/// Negation is not part of the spec; it is derived from the addition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
}

/// A table-backed structure with `+`, `·`, `0`, `1` and derived negation.
///
/// The additive part is validated on construction. Multiplication is taken as
/// given and may be non-commutative or even non-associative; use
/// [`check_axioms`] to find out which laws hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableAlgebra {
    order: usize,
    zero: Elem,
    one: Elem,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

impl TableAlgebra {
    /// Validates shape and closure, checks axioms (1)–(3) on the raw addition
    /// table, then derives negation; an element without a negative is a
    /// violation of axiom (4).
    pub fn from_spec(spec: &RingSpec) -> Result<Self, RingError> {
        let n = spec.order;
        if n == 0 {
            return Err(RingError::OrderOutOfBounds {
                order: 0,
                limit: MAX_TABLE_ORDER,
            });
        }
        for (name, table) in [("add", &spec.add), ("mul", &spec.mul)] {
            if table.len() != n * n {
                return Err(RingError::TableShape {
                    table: name,
                    expected: n * n,
                    found: table.len(),
                });
            }
            if let Some(i) = table.iter().position(|&v| v >= n) {
                return Err(RingError::NotClosed {
                    table: name,
                    x: i / n,
                    y: i % n,
                    value: table[i],
                });
            }
        }
        for (name, index) in [("zero", spec.zero), ("one", spec.one)] {
            if index >= n {
                return Err(RingError::ConstantOutOfRange {
                    name,
                    index,
                    order: n,
                });
            }
        }
        let add: Vec<u32> = spec.add.iter().map(|&v| v as u32).collect();
        let mul: Vec<u32> = spec.mul.iter().map(|&v| v as u32).collect();
        let zero = Elem(spec.zero);
        check_additive_prefix(n, zero, |a, b| Elem(add[a.0 * n + b.0] as usize))?;
        let mut neg = Vec::with_capacity(n);
        for x in 0..n {
            match (0..n).find(|&y| add[x * n + y] as usize == spec.zero) {
                Some(y) => neg.push(y as u32),
                None => {
                    return Err(RingError::AxiomViolation {
                        law: Law::AddInverse,
                        witness: vec![Elem(x)],
                    })
                }
            }
        }
        Ok(TableAlgebra {
            order: n,
            zero,
            one: Elem(spec.one),
            add,
            mul,
            neg,
        })
    }

    pub fn from_ring<R: RingOps + ?Sized>(r: &R) -> Self {
        let n = r.order();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in r.elements() {
            for y in r.elements() {
                add.push(r.add(x, y).0 as u32);
                mul.push(r.mul(x, y).0 as u32);
            }
        }
        let neg = r.elements().map(|x| r.neg(x).0 as u32).collect();
        TableAlgebra {
            order: n,
            zero: r.zero(),
            one: r.one(),
            add,
            mul,
            neg,
        }
    }

    pub fn to_spec(&self) -> RingSpec {
        RingSpec {
            order: self.order,
            zero: self.zero.0,
            one: self.one.0,
            add: self.add.iter().map(|&v| v as usize).collect(),
            mul: self.mul.iter().map(|&v| v as usize).collect(),
        }
    }

    pub(crate) fn add_row(&self, x: usize) -> &[u32] {
        &self.add[x * self.order..(x + 1) * self.order]
    }

    pub(crate) fn mul_row(&self, x: usize) -> &[u32] {
        &self.mul[x * self.order..(x + 1) * self.order]
    }

    /// The multiplication table, row-major.
    pub fn mul_table(&self) -> Vec<usize> {
        self.mul.iter().map(|&v| v as usize).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.mul[x * n + y] == self.mul[y * n + x]))
    }
}

impl RingOps for TableAlgebra {
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
        Elem(self.add[a.0 * self.order + b.0] as usize)
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.0 * self.order + b.0] as usize)
    }

    fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0] as usize)
    }
}

/// Loads a ring from tables with the default bound of [`MAX_TABLE_ORDER`].
pub fn load_ring(spec: &RingSpec) -> Result<FiniteCommRing, RingError> {
    load_ring_within(spec, MAX_TABLE_ORDER)
}

/// Loads a ring from tables, failing unless every ring axiom holds. The error
/// names a violated axiom (see [`super::AxiomReport::first_failure`]) together
/// with a witness tuple.
pub fn load_ring_within(spec: &RingSpec, limit: usize) -> Result<FiniteCommRing, RingError> {
    if spec.order > limit {
        return Err(RingError::OrderOutOfBounds {
            order: spec.order as u64,
            limit,
        });
    }
    let alg = TableAlgebra::from_spec(spec)?;
    let report = check_axioms(&alg)?;
    if let Some(fail) = report.first_failure() {
        return Err(RingError::AxiomViolation {
            law: fail.law,
            witness: fail.witness.clone().unwrap_or_default(),
        });
    }
    Ok(FiniteCommRing::from_tables(alg))
}
