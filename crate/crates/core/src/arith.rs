//! Small exact-integer helpers shared by the formula modules.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Binomial coefficient as an arbitrary-precision integer (0 when k > n).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient that must fit in a `u64`.
pub fn binomial_u64(n: u64, k: u64) -> Result<u64> {
    binomial(n, k).to_u64().ok_or(Error::Overflow("binomial coefficient"))
}

/// `dim S_d = C(n+d-1, n-1)` for the polynomial ring in `n` variables.
pub fn dim_forms(n: usize, d: u64) -> BigUint {
    if n == 0 {
        return if d == 0 { BigUint::one() } else { BigUint::from(0u32) };
    }
    binomial(n as u64 + d - 1, n as u64 - 1)
}

/// Ceiling division of arbitrary-precision integers.
pub fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    (a + b - BigUint::one()) / b
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(3, 5), BigUint::from(0u32));
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial_u64(60, 30).unwrap(), 118_264_581_564_861_424);
        assert!(binomial_u64(200, 100).is_err());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn ceilings() {
        assert_eq!(ceil_div(&BigUint::from(15u32), &BigUint::from(3u32)), BigUint::from(5u32));
        assert_eq!(ceil_div(&BigUint::from(16u32), &BigUint::from(3u32)), BigUint::from(6u32));
    }
}
