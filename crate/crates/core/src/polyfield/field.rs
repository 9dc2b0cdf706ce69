use super::{PolyError, Polynomial, MAX_STRUCTURED_ORDER};
use crate::arith::is_prime;

/// The Galois field `GF(p^n)`, realised as `Z/pZ[x] / (modulus)`.
///
/// Elements are indices `0..q`: the index of a residue class is the rank of
/// its coefficient vector read as base-`p` digits, constant term least
/// significant. Index 0 is zero and index 1 is one.
///
/// Multiplication is defined by polynomial reduction; at construction the
/// field precomputes discrete log tables from a primitive element so that
/// repeated products are table lookups.
#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    n: u32,
    q: usize,
    modulus: Polynomial,
    // exp[i] = g^i for i in 0..q-1; log[exp[i]] = i. log[0] is unused.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl GaloisField {
    /// `GF(p^n)` with the default carrier bound.
    pub fn new(p: u64, n: u32) -> Result<Self, PolyError> {
        Self::with_limit(p, n, MAX_STRUCTURED_ORDER)
    }

    /// `GF(p^n)`, refusing orders above `limit`.
    ///
    /// The modulus is the monic irreducible polynomial of degree `n` with the
    /// smallest rank; for `n = 1` that is `x`, which makes the field plain
    /// arithmetic mod `p`.
    pub fn with_limit(p: u64, n: u32, limit: usize) -> Result<Self, PolyError> {
        if !is_prime(p) {
            return Err(PolyError::NotPrime(p));
        }
        if n == 0 {
            return Err(PolyError::ZeroDegree);
        }
        let q = p
            .checked_pow(n)
            .filter(|&q| q <= limit as u64)
            .ok_or(PolyError::OrderTooLarge { p, n, limit })? as usize;
        let modulus = smallest_irreducible(p, n as usize);
        let mut field = GaloisField {
            p,
            n,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_log_tables();
        Ok(field)
    }

    fn build_log_tables(&mut self) {
        let q = self.q;
        let order = q - 1;
        let prime_factors: Vec<u64> = crate::arith::factorize(order as u64)
            .into_iter()
            .map(|(r, _)| r)
            .collect();
        let generator = (1..q)
            .find(|&g| {
                prime_factors
                    .iter()
                    .all(|&r| self.pow_by_poly(g, order as u64 / r) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![0u32; q];
        let mut cur = 1usize;
        for i in 0..order {
            exp.push(cur as u32);
            log[cur] = i as u32;
            cur = self.mul_by_poly(cur, generator);
        }
        debug_assert_eq!(cur, 1);
        self.exp = exp;
        self.log = log;
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    /// The class of `x` (for `n = 1` the class of `x` is zero).
    pub fn generator(&self) -> usize {
        if self.n == 1 {
            0
        } else {
            self.p as usize
        }
    }

    pub fn to_poly(&self, x: usize) -> Polynomial {
        Polynomial::from_rank(self.p, x as u64)
    }

    /// Index of the residue class of `f`.
    pub fn from_poly(&self, f: &Polynomial) -> Result<usize, PolyError> {
        Ok(f.rem_monic(&self.modulus)?.rank() as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        if self.n == 1 {
            return (a + b) % self.q;
        }
        let p = self.p as usize;
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        if self.n == 1 {
            return (self.q - a) % self.q;
        }
        let p = self.p as usize;
        let mut a = a;
        let (mut out, mut place) = (0, 1);
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if a == 0 || b == 0 {
            return 0;
        }
        let i = (self.log[a] + self.log[b]) as usize % (self.q - 1);
        self.exp[i] as usize
    }

    /// Product computed directly by polynomial reduction, bypassing the log tables.
    pub fn mul_by_poly(&self, a: usize, b: usize) -> usize {
        let prod = self
            .to_poly(a)
            .mulmod(&self.to_poly(b), &self.modulus)
            .expect("modulus is monic of positive degree");
        prod.rank() as usize
    }

    fn pow_by_poly(&self, x: usize, mut e: u64) -> usize {
        let (mut base, mut acc) = (x, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_by_poly(acc, base);
            }
            base = self.mul_by_poly(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let (mut base, mut acc) = (x, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Zero-totalized inverse: `x^(q-2)` for `q > 2`, `x` itself in `GF(2)`,
    /// and `0` for `x = 0`.
    pub fn inverse(&self, x: usize) -> usize {
        if x == 0 || self.q == 2 {
            x
        } else {
            self.pow(x, self.q as u64 - 2)
        }
    }
}

/// The monic irreducible polynomial of degree `n` over `GF(p)` with the
/// smallest rank (constant term as the least significant digit).
pub fn smallest_irreducible(p: u64, n: usize) -> Polynomial {
    Polynomial::monics(p, n)
        .find(Polynomial::is_irreducible)
        .expect("irreducible polynomials exist in every degree")
}
