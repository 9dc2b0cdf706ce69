use std::fmt;

use super::PolyError;

/// A polynomial over the prime field `Z/pZ`, coefficients lowest degree first.
///
/// Always kept in canonical form: coefficients lie in `[0, p)` and the last
/// stored coefficient is nonzero. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    p: u64,
    coeffs: Vec<u64>,
}

impl Polynomial {
    /// Builds a polynomial, reducing coefficients mod `p` and trimming trailing zeros.
    ///
    /// Panics if `p < 2`.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        assert!(p >= 2, "coefficient modulus must be at least 2");
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        Self::new(p, Vec::new())
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    /// The indeterminate `x`.
    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    /// The polynomial whose coefficient vector is the base-`p` expansion of
    /// `rank`, least significant digit = constant term.
    pub fn from_rank(p: u64, mut rank: u64) -> Self {
        let mut coeffs = Vec::new();
        while rank > 0 {
            coeffs.push(rank % p);
            rank /= p;
        }
        Self::new(p, coeffs)
    }

    /// Inverse of [`Polynomial::from_rank`].
    pub fn rank(&self) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Monic polynomial of degree `degree` whose lower coefficients are the
    /// base-`p` digits of `rank` (`rank < p^degree`).
    pub fn monic_from_rank(p: u64, degree: usize, rank: u64) -> Self {
        let mut coeffs = vec![0; degree + 1];
        let mut r = rank;
        for c in coeffs.iter_mut().take(degree) {
            *c = r % p;
            r /= p;
        }
        coeffs[degree] = 1;
        Self::new(p, coeffs)
    }

    /// All monic polynomials of the given degree, in increasing rank order.
    pub fn monics(p: u64, degree: usize) -> impl Iterator<Item = Polynomial> {
        let count = p.pow(degree as u32);
        (0..count).map(move |r| Self::monic_from_rank(p, degree, r))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the end).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn same_field(&self, other: &Self) -> Result<(), PolyError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(PolyError::ModulusMismatch {
                left: self.p,
                right: other.p,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        Ok(Self::new(self.p, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + p - other.coeff(i)) % p)
            .collect();
        Ok(Self::new(p, coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.p));
        }
        let p = self.p;
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + a * b) % p;
            }
        }
        Ok(Self::new(p, coeffs))
    }

    /// Remainder on division by a monic polynomial of degree at least 1.
    pub fn rem_monic(&self, m: &Self) -> Result<Self, PolyError> {
        self.same_field(m)?;
        let dm = check_modulus(m)?;
        let p = self.p;
        let mut r = self.coeffs.clone();
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            if lead != 0 {
                for (i, &c) in m.coeffs.iter().enumerate() {
                    r[shift + i] = (r[shift + i] + (p - lead) * c) % p;
                }
            }
            r.pop();
        }
        Ok(Self::new(p, r))
    }

    /// `(self * other) mod m`, where `m` is monic with degree at least 1.
    pub fn mulmod(&self, other: &Self, m: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        check_modulus(m)?;
        self.mul(other)?.rem_monic(m)
    }

    /// True iff no monic polynomial of degree `1..=deg/2` divides `self`.
    ///
    /// Decided by exhaustive trial division. Constants and the zero
    /// polynomial are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        (1..=d / 2).all(|k| {
            Self::monics(self.p, k).all(|f| !self.rem_monic(&f).expect("monic divisor").is_zero())
        })
    }
}

fn check_modulus(m: &Polynomial) -> Result<usize, PolyError> {
    match m.degree() {
        None | Some(0) => Err(PolyError::ConstantModulus),
        Some(d) if m.is_monic() => Ok(d),
        Some(_) => Err(PolyError::NonMonicModulus),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}
