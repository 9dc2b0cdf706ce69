//! The four-equation generalized inverse for multiplications that need not commute.

use super::MeadowError;
use crate::ring::{Elem, RingError, RingOps};

/// A total binary operation on `0..order` with a two-sided identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulTable {
    order: usize,
    data: Vec<u32>,
    identity: Elem,
}

impl MulTable {
    /// Row-major table. Fails if the table is malformed or has no identity.
    pub fn new(order: usize, data: Vec<usize>) -> Result<Self, MeadowError> {
        if data.len() != order * order {
            return Err(RingError::TableShape {
                table: "mul",
                expected: order * order,
                found: data.len(),
            }
            .into());
        }
        if let Some(i) = data.iter().position(|&v| v >= order) {
            return Err(RingError::NotClosed {
                table: "mul",
                x: i / order,
                y: i % order,
                value: data[i],
            }
            .into());
        }
        let at = |a: usize, b: usize| data[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(MeadowError::NoIdentity)?;
        Ok(MulTable {
            order,
            data: data.into_iter().map(|v| v as u32).collect(),
            identity: Elem(identity),
        })
    }

    /// The multiplication of any ring-like structure.
    pub fn from_ring<R: RingOps + ?Sized>(r: &R) -> Self {
        let mut data = Vec::with_capacity(r.order() * r.order());
        for x in r.elements() {
            for y in r.elements() {
                data.push(r.mul(x, y).0 as u32);
            }
        }
        MulTable {
            order: r.order(),
            data,
            identity: r.one(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.data[a.0 * self.order + b.0] as usize)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.data[x * n + y] == self.data[y * n + x]))
    }
}

/// The unique `y` with `x·x·y = x`, `y·y·x = y`, `x·y·y = y` and `y·x·x = x`,
/// if one exists.
pub fn skew_inverse(t: &MulTable, x: Elem) -> Result<Option<Elem>, MeadowError> {
    let m = |a, b| t.mul(a, b);
    let xx = m(x, x);
    let mut found: Option<Elem> = None;
    for y in (0..t.order).map(Elem) {
        let yy = m(y, y);
        if m(xx, y) == x && m(yy, x) == y && m(x, yy) == y && m(y, xx) == x {
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

/// Every element has a skew inverse.
pub fn is_skew_meadow(t: &MulTable) -> Result<bool, MeadowError> {
    for x in (0..t.order).map(Elem) {
        if skew_inverse(t, x)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
