mod common;

use meadow_core::catalog::meadows_up_to;
use meadow_core::meadow::{
    generalized_inverse, is_skew_meadow, pseudo_witnesses, skew_inverse, to_meadow, MulTable,
    Verdict,
};
use meadow_core::ring::{check_axioms, load_ring, text, Law};
use meadow_core::{Elem, FiniteCommRing, Meadow, MeadowError, RingOps};
use proptest::prelude::*;

fn constructed_rings() -> Vec<FiniteCommRing> {
    let mut out: Vec<FiniteCommRing> = (1..=64).map(|n| FiniteCommRing::zmod(n).unwrap()).collect();
    for (p, k) in [
        (2, 2),
        (2, 3),
        (3, 2),
        (2, 4),
        (5, 2),
        (3, 3),
        (2, 5),
        (7, 2),
        (2, 6),
    ] {
        out.push(FiniteCommRing::galois(p, k).unwrap());
    }
    let z = |n| FiniteCommRing::zmod(n).unwrap();
    let gf = |p, k| FiniteCommRing::galois(p, k).unwrap();
    out.push(FiniteCommRing::product(vec![gf(2, 2), z(4)]).unwrap());
    out.push(FiniteCommRing::product(vec![z(3), gf(3, 2), z(2)]).unwrap());
    out.push(FiniteCommRing::product(vec![z(2), z(2), z(2), z(2)]).unwrap());
    out
}

#[test]
fn constructed_rings_satisfy_all_laws() {
    for r in constructed_rings() {
        let report = check_axioms(&r).unwrap();
        assert!(report.passed(), "{r}: {:?}", report.first_failure());
    }
}

#[test]
fn zmod_meadow_iff_squarefree() {
    for n in 1..=64u64 {
        let squarefree = (2..=n).all(|d| n % (d * d) != 0);
        let verdict = to_meadow(&FiniteCommRing::zmod(n).unwrap()).unwrap();
        assert_eq!(verdict.is_meadow(), squarefree, "Z/{n}Z");
    }
}

#[test]
fn non_meadow_witness_has_no_inverse() {
    for n in [4u64, 8, 9, 12, 18, 25, 27, 50] {
        let r = FiniteCommRing::zmod(n).unwrap();
        match to_meadow(&r).unwrap() {
            Verdict::NotAMeadow { witness } => {
                let brute = r.elements().any(|y| {
                    r.mul(r.mul(witness, witness), y) == witness && r.mul(r.mul(y, y), witness) == y
                });
                assert!(!brute, "Z/{n}Z witness {witness}");
                // Every smaller element does have one.
                for x in (0..witness.0).map(Elem) {
                    assert!(generalized_inverse(&r, x).unwrap().is_some());
                }
            }
            Verdict::Meadow(_) => panic!("Z/{n}Z is not a meadow"),
        }
    }
}

#[test]
fn pseudo_witnesses_solve_only_the_first_equation() {
    let r = FiniteCommRing::zmod(10).unwrap();
    for x in r.elements() {
        for y in pseudo_witnesses(&r, x) {
            assert_eq!(r.mul(r.mul(x, x), y), x);
            assert_ne!(r.mul(r.mul(y, y), x), y);
        }
    }
}

#[test]
fn inverse_laws_on_catalog() {
    for (sig, m) in meadows_up_to(32).unwrap() {
        let fails = common::inverse_law_failures(&m);
        assert!(fails.is_empty(), "{sig}: {fails:?}");
        let fails = common::idempotent_law_failures(&m);
        assert!(fails.is_empty(), "{sig}: {fails:?}");
    }
}

#[test]
fn product_projections_are_homomorphisms() {
    let a = Meadow::new(FiniteCommRing::galois(2, 2).unwrap()).unwrap();
    let b = Meadow::new(FiniteCommRing::zmod(3).unwrap()).unwrap();
    let c = Meadow::new(FiniteCommRing::zmod(5).unwrap()).unwrap();
    let m = Meadow::product(&[a.clone(), b.clone(), c.clone()]).unwrap();
    assert_eq!(m.order(), 60);
    let prod = m.ring().as_product().unwrap();
    let factors = [&a, &b, &c];
    for x in m.elements() {
        for (i, f) in factors.iter().enumerate() {
            assert_eq!(prod.project(m.inv(x), i), f.inv(prod.project(x, i)));
        }
        for y in m.elements() {
            for (i, f) in factors.iter().enumerate() {
                let (px, py) = (prod.project(x, i), prod.project(y, i));
                assert_eq!(prod.project(m.add(x, y), i), f.add(px, py));
                assert_eq!(prod.project(m.mul(x, y), i), f.mul(px, py));
            }
        }
    }
    for (i, f) in factors.iter().enumerate() {
        assert_eq!(prod.project(m.one(), i), f.one());
    }
}

#[test]
fn skew_inverse_agrees_on_commutative_meadows() {
    for (sig, m) in meadows_up_to(16).unwrap() {
        let t = MulTable::from_ring(&m);
        for x in m.elements() {
            assert_eq!(skew_inverse(&t, x).unwrap(), Some(m.inv(x)), "{sig} at {x}");
        }
        assert!(is_skew_meadow(&t).unwrap());
    }
}

#[test]
fn skew_meadows_in_corpus_are_commutative() {
    let corpus = common::skew_corpus();
    let noncommutative = corpus.iter().filter(|t| !t.is_commutative()).count();
    assert!(
        noncommutative > 0,
        "corpus must contain noncommutative rings"
    );
    for t in &corpus {
        let mt = MulTable::from_ring(t);
        if is_skew_meadow(&mt).unwrap() {
            assert!(t.is_commutative(), "{:?}", t.to_spec());
        }
    }
}

#[test]
fn upper_triangular_gf2_is_not_skew_meadow() {
    let corpus = common::bilinear_structures(&[2, 2, 2], true);
    let found = corpus
        .iter()
        .any(|t| !t.is_commutative() && check_axioms(t).unwrap().is_ring_up_to_commutativity());
    assert!(found);
}

#[test]
fn inconsistent_inverse_map_is_rejected() {
    let r = FiniteCommRing::zmod(6).unwrap();
    let mut inv: Vec<Elem> = Meadow::new(r.clone()).unwrap().inverse_map().to_vec();
    inv.swap(1, 5);
    assert!(matches!(
        Meadow::from_inverse_map(r, inv),
        Err(MeadowError::InvalidInverse { .. })
    ));
}

#[test]
fn corrupted_ring_names_violated_law() {
    let mut spec = FiniteCommRing::zmod(6).unwrap().to_spec();
    spec.mul[2 * 6 + 3] = 1;
    spec.mul[3 * 6 + 2] = 1;
    let err = load_ring(&spec).unwrap_err();
    match err {
        meadow_core::RingError::AxiomViolation { law, witness } => {
            assert!(Law::RING.contains(&law), "{law:?}");
            assert!(!witness.is_empty());
        }
        other => panic!("{other:?}"),
    }
}

fn small_ring() -> impl Strategy<Value = FiniteCommRing> {
    let leaf = prop_oneof![
        (1u64..=12).prop_map(|n| FiniteCommRing::zmod(n).unwrap()),
        prop::sample::select(vec![(2u64, 2u32), (2, 3), (3, 2)])
            .prop_map(|(p, k)| FiniteCommRing::galois(p, k).unwrap()),
    ];
    prop::collection::vec(leaf, 1..=2).prop_map(|fs| {
        if fs.len() == 1 {
            fs.into_iter().next().unwrap()
        } else {
            FiniteCommRing::product(fs).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(r in small_ring()) {
        let spec = r.to_spec();
        let back = load_ring(&text::parse(&text::render(&spec)).unwrap()).unwrap();
        prop_assert_eq!(back.to_spec(), spec);
    }

    #[test]
    fn inverse_is_unique_solution(r in small_ring()) {
        for x in r.elements() {
            let sols: Vec<Elem> = r
                .elements()
                .filter(|&y| r.mul(r.mul(x, x), y) == x && r.mul(r.mul(y, y), x) == y)
                .collect();
            prop_assert!(sols.len() <= 1);
            prop_assert_eq!(generalized_inverse(&r, x).unwrap(), sols.first().copied());
        }
    }

    #[test]
    fn meadows_are_closed_under_products(a in 0usize..20, b in 0usize..20) {
        let cat = meadows_up_to(12).unwrap();
        let (_, ma) = &cat[a % cat.len()];
        let (_, mb) = &cat[b % cat.len()];
        let m = Meadow::product(&[ma.clone(), mb.clone()]).unwrap();
        let via_ring = to_meadow(m.ring()).unwrap().into_meadow().unwrap();
        prop_assert_eq!(via_ring.inverse_map(), m.inverse_map());
        prop_assert!(common::inverse_law_failures(&m).is_empty());
    }
}
