//! Catalogs of small meadows, one representative per isomorphism class.

use crate::counting::{classify_order, CountError};
use crate::meadow::Meadow;
use crate::structure::{PrimePower, Signature};

/// One meadow for every signature of order `1..=max_order`, in order of size.
pub fn meadows_up_to(max_order: u64) -> Result<Vec<(Signature, Meadow)>, CountError> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for sig in classify_order(n)?.signatures {
            let m = Meadow::new(sig.instantiate()?)?;
            out.push((sig, m));
        }
    }
    Ok(out)
}

/// Every nonempty multiset of the given fields whose orders multiply to at
/// most `max_order`.
pub fn field_products(fields: &[PrimePower], max_order: u64) -> Vec<Signature> {
    let mut fields = fields.to_vec();
    fields.sort();
    fields.dedup();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(&fields, 0, 1, max_order, &mut current, &mut out);
    out.sort_by(|a: &Signature, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    out
}

fn extend(
    fields: &[PrimePower],
    start: usize,
    order: u64,
    max: u64,
    current: &mut Vec<PrimePower>,
    out: &mut Vec<Signature>,
) {
    for i in start..fields.len() {
        let next = order * fields[i].order();
        if next > max {
            continue;
        }
        current.push(fields[i]);
        out.push(Signature::new(current.clone()));
        extend(fields, i, next, max, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingOps;

    #[test]
    fn small_catalog() {
        let cat = meadows_up_to(8).unwrap();
        // 1, 2, 3, 4 (x2), 5, 6, 7, 8 (x3)
        assert_eq!(cat.len(), 11);
        for (sig, m) in &cat {
            assert_eq!(sig.order(), m.order() as u64);
        }
    }

    #[test]
    fn products_of_gf2_and_gf3() {
        let sigs = field_products(&[PrimePower::new(2, 1), PrimePower::new(3, 1)], 12);
        let names: Vec<String> = sigs.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            names,
            vec![
                "GF(2)",
                "GF(3)",
                "GF(2) x GF(2)",
                "GF(2) x GF(3)",
                "GF(2) x GF(2) x GF(2)",
                "GF(3) x GF(3)",
                "GF(2) x GF(2) x GF(3)",
            ]
        );
    }
}
