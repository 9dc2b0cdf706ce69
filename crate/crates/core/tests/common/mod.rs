#![allow(dead_code)]

use std::collections::HashSet;

use meadow_core::ring::{check_axioms, RingSpec, TableAlgebra};
use meadow_core::{Elem, Meadow, RingOps};

/// Searches for a bijection fixing 0 and 1 that preserves `+` and `·`.
/// Backtracking with forward propagation; meant for orders up to 16.
pub fn brute_isomorphic<A: RingOps + ?Sized, B: RingOps + ?Sized>(a: &A, b: &B) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if !assign(&mut map, &mut used, a.zero().0, b.zero().0) {
        return false;
    }
    if !assign(&mut map, &mut used, a.one().0, b.one().0) {
        return false;
    }
    search(a, b, map, used)
}

fn assign(map: &mut [Option<usize>], used: &mut [bool], x: usize, t: usize) -> bool {
    match map[x] {
        Some(v) => v == t,
        None if used[t] => false,
        None => {
            map[x] = Some(t);
            used[t] = true;
            true
        }
    }
}

fn propagate<A: RingOps + ?Sized, B: RingOps + ?Sized>(
    a: &A,
    b: &B,
    map: &mut [Option<usize>],
    used: &mut [bool],
) -> bool {
    loop {
        let known: Vec<(usize, usize)> = map
            .iter()
            .enumerate()
            .filter_map(|(x, t)| t.map(|t| (x, t)))
            .collect();
        let before = known.len();
        for &(x, fx) in &known {
            for &(y, fy) in &known {
                let s = a.add(Elem(x), Elem(y)).0;
                if !assign(map, used, s, b.add(Elem(fx), Elem(fy)).0) {
                    return false;
                }
                let p = a.mul(Elem(x), Elem(y)).0;
                if !assign(map, used, p, b.mul(Elem(fx), Elem(fy)).0) {
                    return false;
                }
            }
        }
        if map.iter().filter(|t| t.is_some()).count() == before {
            return true;
        }
    }
}

fn search<A: RingOps + ?Sized, B: RingOps + ?Sized>(
    a: &A,
    b: &B,
    mut map: Vec<Option<usize>>,
    mut used: Vec<bool>,
) -> bool {
    if !propagate(a, b, &mut map, &mut used) {
        return false;
    }
    let Some(x) = map.iter().position(Option::is_none) else {
        return true;
    };
    (0..used.len()).filter(|&t| !used[t]).any(|t| {
        let mut m = map.clone();
        let mut u = used.clone();
        assign(&mut m, &mut u, x, t) && search(a, b, m, u)
    })
}

/// The smallest subset containing 0 and 1 closed under `+`, `−`, `·` and `⁻¹`.
pub fn generated_submeadow(m: &Meadow) -> HashSet<usize> {
    let mut set: HashSet<usize> = [m.zero().0, m.one().0].into_iter().collect();
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for &x in &cur {
            for v in [m.neg(Elem(x)).0, m.inv(Elem(x)).0] {
                grew |= set.insert(v);
            }
            for &y in &cur {
                grew |= set.insert(m.add(Elem(x), Elem(y)).0);
                grew |= set.insert(m.mul(Elem(x), Elem(y)).0);
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Enumerates every subset containing 0 and 1 and reports whether some
/// proper one is closed under all meadow operations.
pub fn has_proper_submeadow_by_subsets(m: &Meadow) -> bool {
    let n = m.order();
    let fixed: Vec<usize> = vec![m.zero().0, m.one().0];
    let rest: Vec<usize> = (0..n).filter(|x| !fixed.contains(x)).collect();
    let full = 1u64 << rest.len();
    (0..full - 1).any(|mask| {
        let mut inside = vec![false; n];
        for &f in &fixed {
            inside[f] = true;
        }
        for (i, &x) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                inside[x] = true;
            }
        }
        let members: Vec<usize> = (0..n).filter(|&x| inside[x]).collect();
        members.iter().all(|&x| {
            inside[m.neg(Elem(x)).0]
                && inside[m.inv(Elem(x)).0]
                && members.iter().all(|&y| {
                    inside[m.add(Elem(x), Elem(y)).0] && inside[m.mul(Elem(x), Elem(y)).0]
                })
        })
    })
}

/// Monic polynomials of degree `n` over `GF(p)` (coefficients low to high)
/// that are not a product of two monics of positive degree.
pub fn irreducible_by_products(p: u64, n: usize) -> Vec<Vec<u64>> {
    let monics = |d: usize| -> Vec<Vec<u64>> {
        let count = p.pow(d as u32);
        (0..count)
            .map(|mut r| {
                let mut c = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    c.push(r % p);
                    r /= p;
                }
                c.push(1);
                c
            })
            .collect()
    };
    let mut reducible = HashSet::new();
    for a in 1..=n / 2 {
        for f in monics(a) {
            for g in monics(n - a) {
                let mut prod = vec![0u64; n + 1];
                for (i, x) in f.iter().enumerate() {
                    for (j, y) in g.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                reducible.insert(prod);
            }
        }
    }
    monics(n)
        .into_iter()
        .filter(|c| !reducible.contains(c))
        .collect()
}

/// Multiplications on `Z/d₁ × ⋯ × Z/dₖ` that are bilinear over the chosen
/// generators and have a two-sided identity, as table structures. When
/// `first_is_identity` is set, only those with `g₁` acting as identity are
/// produced.
pub fn bilinear_structures(dims: &[usize], first_is_identity: bool) -> Vec<TableAlgebra> {
    let n: usize = dims.iter().product();
    let k = dims.len();
    let decode = |mut x: usize| -> Vec<usize> {
        let mut v = vec![0; k];
        for i in (0..k).rev() {
            v[i] = x % dims[i];
            x /= dims[i];
        }
        v
    };
    let encode = |v: &[usize]| v.iter().zip(dims).fold(0, |acc, (c, d)| acc * d + c % d);
    let coords: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let gen = |i: usize| {
        let mut v = vec![0; k];
        v[i] = 1;
        encode(&v)
    };
    // Candidates for g_i·g_j: elements killed by gcd(d_i, d_j).
    let candidates = |i: usize, j: usize| -> Vec<usize> {
        let g = gcd(dims[i], dims[j]);
        (0..n)
            .filter(|&x| {
                coords[x]
                    .iter()
                    .zip(dims)
                    .all(|(c, d)| (c * g).is_multiple_of(*d))
            })
            .collect()
    };
    let slots: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let options: Vec<Vec<usize>> = slots
        .iter()
        .map(|&(i, j)| {
            if first_is_identity && i == 0 {
                vec![gen(j)]
            } else if first_is_identity && j == 0 {
                vec![gen(i)]
            } else {
                candidates(i, j)
            }
        })
        .collect();

    let mut add = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let s: Vec<usize> = coords[x]
                .iter()
                .zip(&coords[y])
                .map(|(a, b)| a + b)
                .collect();
            add.push(encode(&s));
        }
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; slots.len()];
    loop {
        let c: Vec<&Vec<usize>> = choice
            .iter()
            .zip(&options)
            .map(|(&ci, opts)| &coords[opts[ci]])
            .collect();
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let mut acc = vec![0usize; k];
                for (s, &(i, j)) in slots.iter().enumerate() {
                    let coef = coords[x][i] * coords[y][j];
                    for (a, v) in acc.iter_mut().zip(c[s]) {
                        *a += coef * v;
                    }
                }
                mul.push(encode(&acc));
            }
        }
        let at = |a: usize, b: usize| mul[a * n + b];
        if let Some(one) = (0..n).find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x)) {
            let spec = RingSpec {
                order: n,
                zero: 0,
                one,
                add: add.clone(),
                mul,
            };
            out.push(TableAlgebra::from_spec(&spec).expect("additive group is valid"));
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Associative, unital, distributive table structures of order at most 8,
/// commutative or not.
pub fn skew_corpus() -> Vec<TableAlgebra> {
    let groups: [(&[usize], bool); 10] = [
        (&[2], false),
        (&[3], false),
        (&[4], false),
        (&[2, 2], false),
        (&[5], false),
        (&[6], false),
        (&[7], false),
        (&[8], false),
        (&[2, 4], false),
        (&[2, 2, 2], true),
    ];
    groups
        .iter()
        .flat_map(|&(dims, fix)| bilinear_structures(dims, fix))
        .filter(|t| check_axioms(t).unwrap().is_ring_up_to_commutativity())
        .collect()
}

/// Failures of the inverse laws and the power rule, exhaustively.
pub fn inverse_law_failures(m: &Meadow) -> Vec<String> {
    let mut out = Vec::new();
    let els: Vec<Elem> = m.elements().collect();
    let (zero, one) = (m.zero(), m.one());
    for &x in &els {
        let xi = m.inv(x);
        if m.inv(xi) != x {
            out.push(format!("(x⁻¹)⁻¹ = x at {x}"));
        }
        if m.inv(m.neg(x)) != m.neg(xi) {
            out.push(format!("(−x)⁻¹ = −x⁻¹ at {x}"));
        }
        if (m.mul(x, xi) == zero) != (x == zero) {
            out.push(format!("x·x⁻¹ = 0 iff x = 0 at {x}"));
        }
        if m.mul(m.mul(x, x), xi) != x || m.mul(m.mul(xi, xi), x) != xi {
            out.push(format!("defining equations at {x}"));
        }
        let mut pows = vec![x];
        for _ in 1..m.order() + 2 {
            pows.push(m.mul(pows[pows.len() - 1], x));
        }
        for n in 3..=pows.len() {
            if pows[n - 1] == x && xi != pows[n - 3] {
                out.push(format!("power rule at {x}, n = {n}"));
            }
        }
        for &y in &els {
            if m.inv(m.mul(x, y)) != m.mul(xi, m.inv(y)) {
                out.push(format!("(xy)⁻¹ = x⁻¹y⁻¹ at {x}, {y}"));
            }
            if m.mul(x, y) == one && xi != y {
                out.push(format!("xy = 1 ⟹ x⁻¹ = y at {x}, {y}"));
            }
        }
    }
    out
}

/// Failures of the idempotent laws, exhaustively.
pub fn idempotent_law_failures(m: &Meadow) -> Vec<String> {
    let mut out = Vec::new();
    let idem: Vec<Elem> = m
        .elements()
        .filter(|&e| e != m.zero() && m.mul(e, e) == e)
        .collect();
    let k = idem.len();
    // below[i * k + j] iff idem[i] ≤ idem[j].
    let below: Vec<bool> = idem
        .iter()
        .flat_map(|&e| idem.iter().map(move |&f| m.mul(e, f) == e))
        .collect();
    let leq = |e: Elem, f: Elem| m.mul(e, f) == e;
    for (i, &e) in idem.iter().enumerate() {
        if !below[i * k + i] {
            out.push(format!("reflexivity at {e}"));
        }
        for (j, &f) in idem.iter().enumerate() {
            if i != j && below[i * k + j] && below[j * k + i] {
                out.push(format!("antisymmetry at {e}, {f}"));
            }
            if i != j && below[i * k + j] {
                let d = m.sub(f, e);
                if d == m.zero() || m.mul(d, d) != d {
                    out.push(format!("{f} − {e} not idempotent"));
                }
            }
            let p = m.mul(e, f);
            if p != m.zero() && m.mul(p, p) != p {
                out.push(format!("product {e}·{f} not idempotent"));
            }
            if below[i * k + j] {
                for (g, &h) in idem.iter().enumerate() {
                    if below[j * k + g] && !below[i * k + g] {
                        out.push(format!("transitivity at {e}, {f}, {h}"));
                    }
                }
            }
        }
    }
    let minimals: Vec<Elem> = idem
        .iter()
        .copied()
        .filter(|&e| idem.iter().all(|&f| f == e || !leq(f, e)))
        .collect();
    for (i, &e) in minimals.iter().enumerate() {
        for &f in &minimals[i + 1..] {
            if m.mul(e, f) != m.zero() {
                out.push(format!("minimals {e}, {f} not orthogonal"));
            }
        }
    }
    let sum = minimals.iter().fold(m.zero(), |acc, &e| m.add(acc, e));
    if m.order() > 1 && sum != m.one() {
        out.push(format!("minimals sum to {sum}"));
    }
    out
}
