//! Truncated power series with arbitrary-precision integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::binomial;

/// Coefficients `c_0..=c_cap` of a power series truncated at degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn zero(cap: usize) -> Self {
        IntSeries { coeffs: vec![BigInt::zero(); cap + 1] }
    }

    /// Series from explicit coefficients; the cap is `coeffs.len() - 1`.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        IntSeries { coeffs }
    }

    /// A polynomial given by `(exponent, coefficient)` pairs, truncated at `cap`.
    pub fn from_terms(terms: &[(usize, i64)], cap: usize) -> Self {
        let mut s = IntSeries::zero(cap);
        for &(e, c) in terms {
            if e <= cap {
                s.coeffs[e] += c;
            }
        }
        s
    }

    /// `(1 - t)^(-n)`, whose coefficients are `C(n+i-1, n-1)`.
    pub fn inverse_one_minus_t_pow(n: usize, cap: usize) -> Self {
        if n == 0 {
            return IntSeries::from_terms(&[(0, 1)], cap);
        }
        IntSeries {
            coeffs: (0..=cap)
                .map(|i| BigInt::from(binomial((n + i - 1) as u64, (n - 1) as u64)))
                .collect(),
        }
    }

    /// `(1 + t)^n`.
    pub fn one_plus_t_pow(n: usize, cap: usize) -> Self {
        IntSeries {
            coeffs: (0..=cap).map(|i| BigInt::from(binomial(n as u64, i as u64))).collect(),
        }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Coefficients as `i64`, panicking on overflow (callers use this only
    /// for dimensions that are known to be small).
    pub fn to_i64_vec(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.to_i64().expect("series coefficient fits in i64")).collect()
    }

    pub fn add(&self, other: &IntSeries) -> IntSeries {
        let cap = self.cap().min(other.cap());
        IntSeries { coeffs: (0..=cap).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &IntSeries) -> IntSeries {
        let cap = self.cap().min(other.cap());
        IntSeries { coeffs: (0..=cap).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    /// Product truncated to the smaller cap.
    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let cap = self.cap().min(other.cap());
        let mut out = vec![BigInt::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                out[i + j] += a * b;
            }
        }
        IntSeries { coeffs: out }
    }

    /// Multiplies by `1 - t^d` in place of a full product.
    pub fn mul_one_minus_t_pow(&self, d: usize) -> IntSeries {
        let mut out = self.coeffs.clone();
        for i in (d..out.len()).rev() {
            out[i] -= &self.coeffs[i - d];
        }
        IntSeries { coeffs: out }
    }

    /// Zeroes everything from the first coefficient `<= 0` onward.
    pub fn truncate_plus(&self) -> IntSeries {
        let cut = self.first_non_positive().unwrap_or(self.coeffs.len());
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i < cut { c.clone() } else { BigInt::zero() })
            .collect();
        IntSeries { coeffs }
    }

    /// Index of the first coefficient `<= 0`, if any within the cap.
    pub fn first_non_positive(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_positive())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Exact coefficients of `prod_i (1 - t^{d_i}) / (1 - t)^n` up to `cap`.
pub fn series_from_product(n: usize, degrees: &[u32], cap: usize) -> IntSeries {
    degrees
        .iter()
        .fold(IntSeries::inverse_one_minus_t_pow(n, cap), |s, &d| s.mul_one_minus_t_pow(d as usize))
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for IntSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Coefficients print as JSON numbers when they fit, strings otherwise.
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}
