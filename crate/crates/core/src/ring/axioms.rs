//! Exhaustive verification of the commutative ring axioms and their basic
//! consequences on small carriers.

use super::{Elem, RingError, RingOps, TableAlgebra};

/// Exhaustive checks (which enumerate triples) are refused above this order.
pub const MAX_CHECK_ORDER: usize = 512;

/// A law checked by [`check_axioms`].
///
/// The first eight are the commutative ring axioms. `LeftIdentity` and
/// `RightDistributive` are implied by them under commutativity and are
/// checked so that the same report decides "ring minus commutativity" for
/// non-commutative tables. The rest are the elementary consequences every
/// ring satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    AddAssoc,
    AddComm,
    AddIdentity,
    AddInverse,
    MulAssoc,
    MulComm,
    MulIdentity,
    Distributive,
    LeftIdentity,
    RightDistributive,
    UniqueOne,
    ZeroAnnihilates,
    NegMul,
    NegOneMul,
    NegZero,
    NegAdd,
    DoubleNeg,
}

impl Law {
    pub const RING: [Law; 8] = [
        Law::AddAssoc,
        Law::AddComm,
        Law::AddIdentity,
        Law::AddInverse,
        Law::MulAssoc,
        Law::MulComm,
        Law::MulIdentity,
        Law::Distributive,
    ];

    pub const TWO_SIDED: [Law; 2] = [Law::LeftIdentity, Law::RightDistributive];

    pub const DERIVED: [Law; 7] = [
        Law::UniqueOne,
        Law::ZeroAnnihilates,
        Law::NegMul,
        Law::NegOneMul,
        Law::NegZero,
        Law::NegAdd,
        Law::DoubleNeg,
    ];

    pub fn all() -> impl Iterator<Item = Law> {
        Self::RING
            .into_iter()
            .chain(Self::TWO_SIDED)
            .chain(Self::DERIVED)
    }

    /// Short stable label: `(1)`..`(8)` for ring axioms.
    pub fn label(self) -> &'static str {
        match self {
            Law::AddAssoc => "(1)",
            Law::AddComm => "(2)",
            Law::AddIdentity => "(3)",
            Law::AddInverse => "(4)",
            Law::MulAssoc => "(5)",
            Law::MulComm => "(6)",
            Law::MulIdentity => "(7)",
            Law::Distributive => "(8)",
            Law::LeftIdentity => "(7')",
            Law::RightDistributive => "(8')",
            Law::UniqueOne => "basic.1",
            Law::ZeroAnnihilates => "basic.2",
            Law::NegMul => "basic.3",
            Law::NegOneMul => "basic.4",
            Law::NegZero => "basic.5",
            Law::NegAdd => "basic.6",
            Law::DoubleNeg => "basic.7",
        }
    }

    pub fn equation(self) -> &'static str {
        match self {
            Law::AddAssoc => "(x+y)+z = x+(y+z)",
            Law::AddComm => "x+y = y+x",
            Law::AddIdentity => "x+0 = x",
            Law::AddInverse => "x+(-x) = 0",
            Law::MulAssoc => "(x·y)·z = x·(y·z)",
            Law::MulComm => "x·y = y·x",
            Law::MulIdentity => "x·1 = x",
            Law::Distributive => "x·(y+z) = x·y + x·z",
            Law::LeftIdentity => "1·x = x",
            Law::RightDistributive => "(x+y)·z = x·z + y·z",
            Law::UniqueOne => "u·x = x for all x implies u = 1",
            Law::ZeroAnnihilates => "0·x = 0",
            Law::NegMul => "(-x)·y = -(x·y)",
            Law::NegOneMul => "(-1)·x = -x",
            Law::NegZero => "-0 = 0",
            Law::NegAdd => "(-x)+(-y) = -(x+y)",
            Law::DoubleNeg => "-(-x) = x",
        }
    }

    /// Stable machine key, e.g. `add_assoc`.
    pub fn key(self) -> &'static str {
        match self {
            Law::AddAssoc => "add_assoc",
            Law::AddComm => "add_comm",
            Law::AddIdentity => "add_identity",
            Law::AddInverse => "add_inverse",
            Law::MulAssoc => "mul_assoc",
            Law::MulComm => "mul_comm",
            Law::MulIdentity => "mul_identity",
            Law::Distributive => "distributive",
            Law::LeftIdentity => "left_identity",
            Law::RightDistributive => "right_distributive",
            Law::UniqueOne => "unique_one",
            Law::ZeroAnnihilates => "zero_annihilates",
            Law::NegMul => "neg_mul",
            Law::NegOneMul => "neg_one_mul",
            Law::NegZero => "neg_zero",
            Law::NegAdd => "neg_add",
            Law::DoubleNeg => "double_neg",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub law: Law,
    /// Lexicographically least counterexample, `None` if the law holds.
    pub witness: Option<Vec<Elem>>,
}

impl LawResult {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub order: usize,
    /// Order 1, where `0 = 1`.
    pub degenerate: bool,
    pub results: Vec<LawResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(LawResult::holds)
    }

    /// The violation to report: axioms before derived laws, then the fewest
    /// witness elements, then the earliest law.
    pub fn first_failure(&self) -> Option<&LawResult> {
        self.results.iter().filter(|r| !r.holds()).min_by_key(|r| {
            let derived = Law::DERIVED.contains(&r.law);
            (derived, r.witness.as_ref().map_or(0, Vec::len))
        })
    }

    pub fn result(&self, law: Law) -> &LawResult {
        self.results
            .iter()
            .find(|r| r.law == law)
            .expect("every law is checked")
    }

    pub fn holds(&self, law: Law) -> bool {
        self.result(law).holds()
    }

    /// True if everything except commutativity of multiplication holds.
    pub fn is_ring_up_to_commutativity(&self) -> bool {
        self.results
            .iter()
            .filter(|r| r.law != Law::MulComm)
            .all(LawResult::holds)
    }
}

fn first_pair(n: usize, mut bad: impl FnMut(Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for x in 0..n {
        for y in 0..n {
            if bad(Elem(x), Elem(y)) {
                return Some(vec![Elem(x), Elem(y)]);
            }
        }
    }
    None
}

fn first_triple(n: usize, mut bad: impl FnMut(Elem, Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if bad(Elem(x), Elem(y), Elem(z)) {
                    return Some(vec![Elem(x), Elem(y), Elem(z)]);
                }
            }
        }
    }
    None
}

/// Like [`first_triple`], with the innermost loop done by `bad_z(x, y)`,
/// which returns the first failing `z`.
fn first_triple_rows(n: usize, bad_z: impl Fn(usize, usize) -> Option<usize>) -> Option<Vec<Elem>> {
    for x in 0..n {
        for y in 0..n {
            if let Some(z) = bad_z(x, y) {
                return Some(vec![Elem(x), Elem(y), Elem(z)]);
            }
        }
    }
    None
}

fn first_single(n: usize, mut bad: impl FnMut(Elem) -> bool) -> Option<Vec<Elem>> {
    (0..n).map(Elem).find(|&x| bad(x)).map(|x| vec![x])
}

/// Axioms (1)–(3) on a bare addition, before negation can be derived.
pub(crate) fn check_additive_prefix(
    n: usize,
    zero: Elem,
    add: impl Fn(Elem, Elem) -> Elem,
) -> Result<(), RingError> {
    // Same precedence as `AxiomReport::first_failure`: smallest witness first.
    let checks: [(Law, Option<Vec<Elem>>); 3] = [
        (Law::AddIdentity, first_single(n, |x| add(x, zero) != x)),
        (Law::AddComm, first_pair(n, |x, y| add(x, y) != add(y, x))),
        (
            Law::AddAssoc,
            first_triple(n, |x, y, z| add(add(x, y), z) != add(x, add(y, z))),
        ),
    ];
    for (law, witness) in checks {
        if let Some(witness) = witness {
            return Err(RingError::AxiomViolation { law, witness });
        }
    }
    Ok(())
}

/// Checks every [`Law`] exhaustively. Refuses carriers above [`MAX_CHECK_ORDER`].
pub fn check_axioms<R: RingOps + ?Sized>(r: &R) -> Result<AxiomReport, RingError> {
    let n = r.order();
    if n > MAX_CHECK_ORDER {
        return Err(RingError::TooLargeForCheck {
            order: n,
            limit: MAX_CHECK_ORDER,
        });
    }
    // Structured rings answer each operation by decoding; the cubic laws are
    // far cheaper on plain tables.
    let table = TableAlgebra::from_ring(r);
    let r = &table;
    let (zero, one) = (r.zero(), r.one());
    let results = Law::all()
        .map(|law| {
            let witness = match law {
                Law::AddAssoc => first_triple_rows(n, |x, y| {
                    let (xy, row_x, row_y) = (r.add_row(x)[y], r.add_row(x), r.add_row(y));
                    let row_xy = r.add_row(xy as usize);
                    (0..n).find(|&z| row_xy[z] != row_x[row_y[z] as usize])
                }),
                Law::AddComm => first_pair(n, |x, y| r.add(x, y) != r.add(y, x)),
                Law::AddIdentity => first_single(n, |x| r.add(x, zero) != x),
                Law::AddInverse => first_single(n, |x| r.add(x, r.neg(x)) != zero),
                Law::MulAssoc => first_triple_rows(n, |x, y| {
                    let (row_x, row_y) = (r.mul_row(x), r.mul_row(y));
                    let row_xy = r.mul_row(row_x[y] as usize);
                    (0..n).find(|&z| row_xy[z] != row_x[row_y[z] as usize])
                }),
                Law::MulComm => first_pair(n, |x, y| r.mul(x, y) != r.mul(y, x)),
                Law::MulIdentity => first_single(n, |x| r.mul(x, one) != x),
                Law::Distributive => first_triple_rows(n, |x, y| {
                    let (mrow_x, arow_y) = (r.mul_row(x), r.add_row(y));
                    let arow_xy = r.add_row(mrow_x[y] as usize);
                    (0..n).find(|&z| mrow_x[arow_y[z] as usize] != arow_xy[mrow_x[z] as usize])
                }),
                Law::LeftIdentity => first_single(n, |x| r.mul(one, x) != x),
                Law::RightDistributive => first_triple_rows(n, |x, y| {
                    let (mrow_x, mrow_y) = (r.mul_row(x), r.mul_row(y));
                    let mrow_sum = r.mul_row(r.add_row(x)[y] as usize);
                    (0..n)
                        .find(|&z| mrow_sum[z] != r.add_row(mrow_x[z] as usize)[mrow_y[z] as usize])
                }),
                Law::UniqueOne => first_single(n, |u| {
                    u != one && r.elements().all(|x| r.mul(u, x) == x && r.mul(x, u) == x)
                }),
                Law::ZeroAnnihilates => first_single(n, |x| r.mul(zero, x) != zero),
                Law::NegMul => first_pair(n, |x, y| r.mul(r.neg(x), y) != r.neg(r.mul(x, y))),
                Law::NegOneMul => first_single(n, |x| r.mul(r.neg(one), x) != r.neg(x)),
                Law::NegZero => (r.neg(zero) != zero).then(|| vec![zero]),
                Law::NegAdd => {
                    first_pair(n, |x, y| r.add(r.neg(x), r.neg(y)) != r.neg(r.add(x, y)))
                }
                Law::DoubleNeg => first_single(n, |x| r.neg(r.neg(x)) != x),
            };
            LawResult { law, witness }
        })
        .collect();
    Ok(AxiomReport {
        order: n,
        degenerate: n == 1,
        results,
    })
}
