//! Dense homogeneous polynomials over F_p.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FpElement, PrimeField};
use crate::monomial::{basis, write_monomial, Monomial};
use crate::seed::{derive_seed, rng_from_seed};

/// A homogeneous polynomial of fixed degree, stored as a dense coefficient
/// vector indexed by [`crate::monomial::basis`]`(n, degree)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    field: PrimeField,
    n: usize,
    degree: u32,
    coeffs: Vec<FpElement>,
}

impl Form {
    pub fn zero(field: PrimeField, n: usize, degree: u32) -> Self {
        let len = basis(n, degree).len();
        Form { field, n, degree, coeffs: vec![0; len] }
    }

    pub fn constant(field: PrimeField, n: usize, c: FpElement) -> Self {
        Form { field, n, degree: 0, coeffs: vec![field.reduce(c)] }
    }

    /// Builds a form from a coefficient vector in grevlex basis order.
    pub fn from_coeffs(field: PrimeField, n: usize, degree: u32, coeffs: Vec<FpElement>) -> Result<Self> {
        let len = basis(n, degree).len();
        if coeffs.len() != len {
            return Err(Error::InvalidArgument(format!(
                "expected {len} coefficients for degree {degree} in {n} variables, got {}",
                coeffs.len()
            )));
        }
        let coeffs = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        Ok(Form { field, n, degree, coeffs })
    }

    /// `c * m`.
    pub fn monomial(field: PrimeField, m: &Monomial, c: FpElement) -> Self {
        let mut f = Form::zero(field, m.n(), m.degree());
        let idx = basis(m.n(), m.degree()).rank(m.exponents()).expect("monomial is in its own basis");
        f.coeffs[idx] = field.reduce(c);
        f
    }

    pub fn variable(field: PrimeField, n: usize, j: usize) -> Self {
        Form::monomial(field, &Monomial::variable(n, j), 1)
    }

    /// `sum_j coeffs[j] * x_j`.
    pub fn linear(field: PrimeField, coeffs: &[FpElement]) -> Self {
        let n = coeffs.len();
        let b = basis(n, 1);
        let mut f = Form::zero(field, n, 1);
        for (j, &c) in coeffs.iter().enumerate() {
            let idx = b.rank(Monomial::variable(n, j).exponents()).unwrap();
            f.coeffs[idx] = field.reduce(c);
        }
        f
    }

    /// Sum of all monomials of degree `d`: the complete homogeneous symmetric polynomial.
    pub fn complete_homogeneous(field: PrimeField, n: usize, d: u32) -> Self {
        let len = basis(n, d).len();
        Form { field, n, degree: d, coeffs: vec![1 % field.modulus(); len] }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[FpElement] {
        &self.coeffs
    }

    pub fn coeff(&self, exponents: &[u32]) -> FpElement {
        basis(self.n, self.degree).rank(exponents).map_or(0, |i| self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// Nonzero terms as `(monomial, coefficient)` in basis order.
    pub fn terms(&self) -> Vec<(Monomial, FpElement)> {
        let b = basis(self.n, self.degree);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (b.unrank(i).clone(), c))
            .collect()
    }

    fn check_ring(&self, other: &Form) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingMismatch(format!("{} vs {} variables", self.n, other.n)));
        }
        if self.field != other.field {
            return Err(Error::RingMismatch(format!(
                "F_{} vs F_{}",
                self.field.modulus(),
                other.field.modulus()
            )));
        }
        Ok(())
    }

    fn check_same_degree(&self, other: &Form) -> Result<()> {
        self.check_ring(other)?;
        if self.degree != other.degree {
            return Err(Error::RingMismatch(format!("degree {} vs {}", self.degree, other.degree)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.check_same_degree(other)?;
        let f = self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Form { coeffs, ..self.clone() })
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        self.check_same_degree(other)?;
        let f = self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(Form { coeffs, ..self.clone() })
    }

    pub fn scale(&self, c: FpElement) -> Form {
        let f = self.field;
        let c = f.reduce(c);
        Form { coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Form) -> Result<Form> {
        self.check_ring(other)?;
        let n = self.n;
        let field = self.field;
        let left = basis(n, self.degree);
        let right = basis(n, other.degree);
        let target = basis(n, self.degree + other.degree);
        let mut out = vec![0; target.len()];
        let rhs: Vec<(&[u32], FpElement)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (right.unrank(j).exponents(), c))
            .collect();
        let mut buf = vec![0u32; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mi = left.unrank(i).exponents();
            for &(mj, b) in &rhs {
                for k in 0..n {
                    buf[k] = mi[k] + mj[k];
                }
                let t = target.rank(&buf).expect("product degree is consistent");
                out[t] = field.mul_add(out[t], a, b);
            }
        }
        Ok(Form { field, n, degree: self.degree + other.degree, coeffs: out })
    }

    /// `self * m` for a monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Form {
        debug_assert_eq!(m.n(), self.n);
        let target = basis(self.n, self.degree + m.degree());
        let src = basis(self.n, self.degree);
        let mut out = vec![0; target.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                let prod = src.unrank(i).mul(m);
                out[target.rank(prod.exponents()).unwrap()] = a;
            }
        }
        Form { field: self.field, n: self.n, degree: self.degree + m.degree(), coeffs: out }
    }

    /// `self^k` by repeated squaring; `k = 0` gives the constant 1.
    pub fn power(&self, k: u32) -> Form {
        let mut acc = Form::constant(self.field, self.n, 1);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Evaluates at a point of F_p^n.
    pub fn evaluate(&self, point: &[FpElement]) -> FpElement {
        let f = self.field;
        self.terms().into_iter().fold(0, |acc, (m, c)| {
            let v = m
                .exponents()
                .iter()
                .zip(point)
                .fold(c, |v, (&e, &x)| f.mul(v, f.pow(x, e as u64)));
            f.add(acc, v)
        })
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c != 1 || m.degree() == 0 {
                write!(f, "{c}")?;
                if m.degree() > 0 {
                    f.write_str("*")?;
                }
            }
            if m.degree() > 0 {
                write_monomial(f, m.exponents())?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl serde::Serialize for Form {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Form with independent uniform coefficients, keyed by `(n, d, seed, p)`.
pub fn random_form(n: usize, d: u32, seed: u64, p: u64) -> Result<Form> {
    let field = PrimeField::new(p)?;
    Ok(random_form_in(field, n, d, seed))
}

pub fn random_form_in(field: PrimeField, n: usize, d: u32, seed: u64) -> Form {
    let mut rng = rng_from_seed(derive_seed(seed, &[n as u64, d as u64]));
    let len = basis(n, d).len();
    let coeffs = (0..len).map(|_| field.random(&mut rng)).collect();
    Form { field, n, degree: d, coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> PrimeField {
        PrimeField::new(1_000_033).unwrap()
    }

    #[test]
    fn product_of_variables() {
        let f = fp();
        let x = Form::variable(f, 2, 0);
        let y = Form::variable(f, 2, 1);
        let xy = x.mul(&y).unwrap();
        assert_eq!(xy, Form::monomial(f, &Monomial::new(vec![1, 1]), 1));
        assert_eq!(xy.to_string(), "x1*x2");
    }

    #[test]
    fn binomial_square_and_cube() {
        let f = fp();
        let s = Form::linear(f, &[1, 1]);
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.coeff(&[2, 0]), 1);
        assert_eq!(sq.coeff(&[1, 1]), 2);
        assert_eq!(sq.coeff(&[0, 2]), 1);
        let cube = s.power(3);
        let got: Vec<u64> = [[3, 0], [2, 1], [1, 2], [0, 3]].iter().map(|e| cube.coeff(e)).collect();
        assert_eq!(got, [1, 3, 3, 1]);
        assert_eq!(Form::variable(f, 1, 0).power(3).to_string(), "x^3");
    }

    #[test]
    fn random_products_commute_and_powers_agree() {
        for seed in 0..10 {
            let a = random_form(3, 2, seed, 1_000_033).unwrap();
            let b = random_form(3, 2, seed + 100, 1_000_033).unwrap();
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let sq = a.power(2);
            assert_eq!(a.power(4), sq.mul(&sq).unwrap());
            assert_eq!(a.power(3), a.mul(&a).unwrap().mul(&a).unwrap());
        }
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let f = fp();
        let a = Form::variable(f, 2, 0);
        let b = Form::variable(f, 3, 0);
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch(_))));
        let g = PrimeField::new(101).unwrap();
        assert!(a.mul(&Form::variable(g, 2, 0)).is_err());
        assert!(a.add(&a.power(2)).is_err());
    }

    #[test]
    fn random_forms_are_deterministic() {
        assert_eq!(random_form(3, 4, 9, 1_000_033).unwrap(), random_form(3, 4, 9, 1_000_033).unwrap());
        for s in 0..100u64 {
            let a = random_form(2, 1, 2 * s, 1_000_033).unwrap();
            let b = random_form(2, 1, 2 * s + 1, 1_000_033).unwrap();
            assert_ne!(a, b);
        }
        let c = random_form(4, 0, 3, 1_000_033).unwrap();
        assert_eq!(c.coeffs().len(), 1);
        assert!(random_form(2, 1, 0, 1_000_000).is_err());
    }

    #[test]
    fn evaluation_is_a_ring_map() {
        let a = random_form(3, 2, 1, 101).unwrap();
        let b = random_form(3, 3, 2, 101).unwrap();
        let pt = [3, 17, 55];
        let f = a.field();
        assert_eq!(a.mul(&b).unwrap().evaluate(&pt), f.mul(a.evaluate(&pt), b.evaluate(&pt)));
    }
}
