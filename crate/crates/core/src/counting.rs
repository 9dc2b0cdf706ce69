//! Element counts, the squarefree criterion for `Z/nZ`, and enumeration of
//! all meadows of a given order up to isomorphism.
//!
//! Closed-form counts are always computed next to a brute-force scan and the
//! two must agree.

use std::collections::HashMap;

use thiserror::Error;

use crate::arith::factorize;
use crate::meadow::{to_meadow, Meadow, MeadowError};
use crate::ring::{Elem, FiniteCommRing, RingError, RingOps};
use crate::structure::{signature, PrimePower, Signature, StructureError};

/// Largest `n` accepted by [`is_squarefree`] and [`classify_order`].
pub const MAX_CLASSIFY_ORDER: u64 = 1_000_000;

/// Largest bound accepted by [`zmod_meadow_law`].
pub const MAX_LAW_BOUND: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("{value} is outside the supported range 1..={max}")]
    OutOfRange { value: u64, max: u64 },
    #[error("{what}: brute force counts {brute}, closed form gives {formula}")]
    Mismatch {
        what: &'static str,
        brute: u64,
        formula: u64,
    },
    #[error("residue map for n = {n} is not an isomorphism: {reason}")]
    ResidueMap { n: u64, reason: String },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Meadow(#[from] MeadowError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

fn check_range(n: u64, max: u64) -> Result<(), CountError> {
    if n == 0 || n > max {
        Err(CountError::OutOfRange { value: n, max })
    } else {
        Ok(())
    }
}

/// No prime square divides `n`.
pub fn is_squarefree(n: u64) -> Result<bool, CountError> {
    check_range(n, MAX_CLASSIFY_ORDER)?;
    Ok(factorize(n).iter().all(|&(_, e)| e == 1))
}

/// A count obtained two ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Count {
    pub brute: u64,
    pub formula: u64,
}

fn agreed(what: &'static str, brute: u64, formula: u64) -> Result<Count, CountError> {
    if brute == formula {
        Ok(Count { brute, formula })
    } else {
        Err(CountError::Mismatch {
            what,
            brute,
            formula,
        })
    }
}

/// `2^l · 3^(n-l)` for `n` factors of which `l` have characteristic 2.
///
/// A field has the self-inverses `0`, `1` and `-1`, and `1 = -1` exactly in
/// characteristic 2, so every `GF(2^k)` contributes 2 rather than 3.
pub fn self_inverse_formula(sig: &Signature) -> u64 {
    let l = sig.char2_count() as u32;
    let n = sig.len() as u32;
    2u64.pow(l) * 3u64.pow(n - l)
}

/// `Π (p^k - 1)` over the factors.
pub fn invertible_formula(sig: &Signature) -> u64 {
    sig.parts().iter().map(|pp| pp.order() - 1).product()
}

fn count_self_inverse_with(m: &Meadow, sig: &Signature) -> Result<Count, CountError> {
    let brute = m.elements().filter(|&x| m.is_self_inverse(x)).count() as u64;
    agreed("self-inverse elements", brute, self_inverse_formula(sig))
}

fn count_invertible_with(m: &Meadow, sig: &Signature) -> Result<Count, CountError> {
    let brute = m.elements().filter(|&x| m.is_invertible(x)).count() as u64;
    agreed("invertible elements", brute, invertible_formula(sig))
}

/// Number of `m` with `m = m⁻¹`, by scan and by formula.
pub fn count_self_inverse(m: &Meadow) -> Result<Count, CountError> {
    count_self_inverse_with(m, &signature(m)?)
}

/// Number of `m` with `m·m⁻¹ = 1`, by scan and by formula.
pub fn count_invertible(m: &Meadow) -> Result<Count, CountError> {
    count_invertible_with(m, &signature(m)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub order: usize,
    pub self_inverse: Count,
    pub invertible: Count,
    /// Number of factors of characteristic 2.
    pub char2_factors: usize,
    /// Number of factors.
    pub factors: usize,
    pub signature: Signature,
    pub self_inverse_elements: Vec<Elem>,
    pub invertible_elements: Vec<Elem>,
}

pub fn count_report(m: &Meadow) -> Result<CountReport, CountError> {
    let sig = signature(m)?;
    Ok(CountReport {
        order: m.order(),
        self_inverse: count_self_inverse_with(m, &sig)?,
        invertible: count_invertible_with(m, &sig)?,
        char2_factors: sig.char2_count(),
        factors: sig.len(),
        self_inverse_elements: m.elements().filter(|&x| m.is_self_inverse(x)).collect(),
        invertible_elements: m.elements().filter(|&x| m.is_invertible(x)).collect(),
        signature: sig,
    })
}

/// All meadows of one order, up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub order: u64,
    /// Fewest factors first, then lexicographic in `(p, k)`.
    pub signatures: Vec<Signature>,
    /// Index of the minimal meadow's signature; present iff the order is squarefree.
    pub minimal: Option<usize>,
}

/// Partitions of `a` into non-increasing positive parts, memoized.
fn partitions(
    a: u32,
    max_part: u32,
    memo: &mut HashMap<(u32, u32), Vec<Vec<u32>>>,
) -> Vec<Vec<u32>> {
    if a == 0 {
        return vec![vec![]];
    }
    if let Some(hit) = memo.get(&(a, max_part)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(a)).rev() {
        for mut rest in partitions(a - first, first, memo) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    memo.insert((a, max_part), out.clone());
    out
}

/// Every multiset of prime powers whose product is `n`; each is the
/// signature of exactly one meadow of order `n` up to isomorphism.
pub fn classify_order(n: u64) -> Result<Classification, CountError> {
    check_range(n, MAX_CLASSIFY_ORDER)?;
    let mut memo = HashMap::new();
    let mut combos: Vec<Vec<PrimePower>> = vec![vec![]];
    for (p, a) in factorize(n) {
        let mut next = Vec::new();
        for combo in &combos {
            for part in partitions(a, a, &mut memo) {
                let mut c = combo.clone();
                c.extend(part.into_iter().map(|k| PrimePower::new(p, k)));
                next.push(c);
            }
        }
        combos = next;
    }
    let mut signatures: Vec<Signature> = combos.into_iter().map(Signature::new).collect();
    signatures.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let minimal = signatures.iter().position(Signature::is_minimal);
    Ok(Classification {
        order: n,
        signatures,
        minimal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub bound: u64,
    /// The `n` for which `Z/nZ` is a meadow.
    pub meadows: Vec<u64>,
    /// Each `n` where meadow-hood and squarefreeness disagree.
    pub counterexamples: Vec<u64>,
}

/// For each `1 ≤ n ≤ bound`, compares the exhaustive meadow test on `Z/nZ`
/// with squarefreeness of `n`.
pub fn zmod_meadow_law(bound: u64) -> Result<LawReport, CountError> {
    check_range(bound, MAX_LAW_BOUND)?;
    let mut meadows = Vec::new();
    let mut counterexamples = Vec::new();
    for n in 1..=bound {
        let is_meadow = to_meadow(&FiniteCommRing::zmod(n)?)?.is_meadow();
        if is_meadow {
            meadows.push(n);
        }
        if is_meadow != is_squarefree(n)? {
            counterexamples.push(n);
        }
    }
    Ok(LawReport {
        bound,
        meadows,
        counterexamples,
    })
}

/// The residue map `x ↦ (x mod p₁, …, x mod p_k)` from `Z/nZ` onto the
/// product of its prime fields, checked exhaustively to be a bijective ring
/// homomorphism. `n` must be squarefree and at least 2.
pub fn residue_isomorphism(n: u64) -> Result<Vec<Elem>, CountError> {
    if !is_squarefree(n)? || n < 2 {
        return Err(CountError::ResidueMap {
            n,
            reason: "n must be squarefree and at least 2".into(),
        });
    }
    let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
    let source = FiniteCommRing::zmod(n)?;
    let fields = primes
        .iter()
        .map(|&p| FiniteCommRing::galois(p, 1))
        .collect::<Result<Vec<_>, _>>()?;
    let target = FiniteCommRing::product(fields)?;
    let prod = target.as_product().expect("product ring");
    let map: Vec<Elem> = (0..n)
        .map(|x| {
            let parts: Vec<Elem> = primes.iter().map(|&p| Elem((x % p) as usize)).collect();
            prod.compose(&parts)
        })
        .collect();
    let fail = |reason: String| Err(CountError::ResidueMap { n, reason });
    let mut seen = vec![false; n as usize];
    for &y in &map {
        if std::mem::replace(&mut seen[y.0], true) {
            return fail(format!("{y} is hit twice"));
        }
    }
    if map[source.one().0] != target.one() {
        return fail("1 is not mapped to 1".into());
    }
    for x in source.elements() {
        for y in source.elements() {
            if map[source.add(x, y).0] != target.add(map[x.0], map[y.0]) {
                return fail(format!("addition fails at ({x}, {y})"));
            }
            if map[source.mul(x, y).0] != target.mul(map[x.0], map[y.0]) {
                return fail(format!("multiplication fails at ({x}, {y})"));
            }
        }
    }
    Ok(map)
}
