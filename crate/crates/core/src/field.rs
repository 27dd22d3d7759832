//! Arithmetic in the prime field F_p.
//!
//! Elements are plain `u64` residues in `[0, p)`; the [`PrimeField`] value
//! carries the modulus and performs every operation. Moduli are kept below
//! 2^31 so that a product of two residues plus one more residue fits in a
//! `u64` without intermediate reduction.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Residue in `[0, p)` for the ambient [`PrimeField`].
pub type FpElement = u64;

/// Default primes for generic experiments: all exceed 10^6 and are
/// congruent to 1 mod 4, so `sqrt(-1)` exists in each of them.
pub const DEFAULT_PRIMES: [u64; 3] = [1_000_033, 1_048_589, 2_097_169];

const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> FpElement {
        a % self.p
    }

    /// Maps a signed integer to its residue.
    pub fn from_i64(&self, a: i64) -> FpElement {
        let r = a.rem_euclid(self.p as i64);
        r as u64
    }

    /// Symmetric lift of a residue to `(-p/2, p/2]`.
    pub fn to_i64(&self, a: FpElement) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    #[inline]
    pub fn add(&self, a: FpElement, b: FpElement) -> FpElement {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: FpElement, b: FpElement) -> FpElement {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: FpElement) -> FpElement {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: FpElement, b: FpElement) -> FpElement {
        (a * b) % self.p
    }

    /// `a + b * c`, the inner step of every elimination loop.
    #[inline]
    pub fn mul_add(&self, a: FpElement, b: FpElement, c: FpElement) -> FpElement {
        (a + b * c) % self.p
    }

    pub fn pow(&self, mut base: FpElement, mut exp: u64) -> FpElement {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse.
    ///
    /// Panics on zero; callers only invert pivots.
    pub fn inv(&self, a: FpElement) -> FpElement {
        assert!(!a.is_multiple_of(self.p), "attempted to invert zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn div(&self, a: FpElement, b: FpElement) -> FpElement {
        self.mul(a, self.inv(b))
    }

    /// A square root of -1, available exactly when `p = 1 mod 4`.
    pub fn sqrt_neg_one(&self) -> Result<FpElement> {
        if self.p % 4 != 1 {
            return Err(Error::NoSquareRootOfMinusOne(self.p));
        }
        // Any quadratic non-residue g gives g^((p-1)/4) with square -1.
        for g in 2..self.p {
            if self.pow(g, (self.p - 1) / 2) == self.p - 1 {
                return Ok(self.pow(g, (self.p - 1) / 4));
            }
        }
        unreachable!("every odd prime has a quadratic non-residue")
    }

    /// Uniform residue.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FpElement {
        rng.gen_range(0..self.p)
    }

    /// Uniform nonzero residue.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FpElement {
        rng.gen_range(1..self.p)
    }
}

/// Deterministic primality test by trial division (inputs stay below 2^32).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
