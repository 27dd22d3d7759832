//! Numerical semigroups, their Hilbert-series numerators, and the test
//! "numerator is a product of cyclotomic polynomials" against
//! "numerator has the complete-intersection shape prod (1 - t^b)".

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::report::Verdict;

/// Polynomial with exact `i64` coefficients, lowest degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// `1 - t^b`.
    pub fn one_minus_t_pow(b: usize) -> Self {
        let mut c = vec![0; b + 1];
        c[0] += 1;
        c[b] -= 1;
        Self::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| self.coeff(i).checked_add(other.coeff(i)).ok_or(Error::Overflow("polynomial addition")))
            .collect::<Result<_>>()?;
        Ok(Self::from_coeffs(c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| self.coeff(i).checked_sub(other.coeff(i)).ok_or(Error::Overflow("polynomial subtraction")))
            .collect::<Result<_>>()?;
        Ok(Self::from_coeffs(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut c = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow("polynomial multiplication"))?;
                c[i + j] = c[i + j].checked_add(term).ok_or(Error::Overflow("polynomial multiplication"))?;
            }
        }
        Ok(Self::from_coeffs(c))
    }

    /// Quotient and remainder by a divisor whose leading coefficient is `+-1`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::InvalidArgument("division by zero polynomial".into()))?;
        let lead = divisor.coeffs[dd];
        if lead.abs() != 1 {
            return Err(Error::InvalidArgument("divisor must have leading coefficient +-1".into()));
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd] * lead;
            if q == 0 {
                continue;
            }
            quot[i] = q;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let term = q.checked_mul(b).ok_or(Error::Overflow("polynomial division"))?;
                rem[i + j] = rem[i + j].checked_sub(term).ok_or(Error::Overflow("polynomial division"))?;
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// The quotient when the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn evaluate(&self, t: i64) -> Result<i64> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(t).and_then(|v| v.checked_add(c)).ok_or(Error::Overflow("polynomial evaluation"))
        })
    }

    /// Multiplicity of `t = 1` as a root.
    pub fn order_at_one(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("zero polynomial has no root order".into()));
        }
        let linear = Self::one_minus_t_pow(1);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact(&linear)? {
            p = q;
            k += 1;
        }
        Ok(k)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

fn euler_phi(mut m: usize) -> usize {
    let mut result = m;
    let mut q = 2;
    while q * q <= m {
        if m.is_multiple_of(q) {
            while m.is_multiple_of(q) {
                m /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<usize, Arc<IntPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<IntPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Phi_m`, obtained from `t^m - 1` by dividing out `Phi_d` for proper divisors `d`.
pub fn cyclotomic(m: usize) -> Result<Arc<IntPolynomial>> {
    if m == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be positive".into()));
    }
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return Ok(p.clone());
    }
    let mut c = vec![0i64; m + 1];
    c[0] = -1;
    c[m] = 1;
    let mut p = IntPolynomial::from_coeffs(c);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let phi_d = cyclotomic(d)?;
        p = p.div_exact(&phi_d)?.ok_or(Error::Invariant(format!("Phi_{d} does not divide t^{m} - 1")))?;
    }
    let p = Arc::new(p);
    cyclotomic_cache().lock().unwrap().insert(m, p.clone());
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicCertificate {
    /// Power of `t` dividing the polynomial.
    pub t_power: usize,
    /// Indices `m` of the cyclotomic factors, with repetition.
    pub factors: Vec<usize>,
    /// What remains after the factors are removed.
    pub residue: IntPolynomial,
}

/// Whether `p` is `+-t^j` times a product of cyclotomic polynomials.
pub fn is_cyclotomic(p: &IntPolynomial) -> Result<(bool, CyclotomicCertificate)> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    let t_power = p.coeffs.iter().position(|&c| c != 0).unwrap_or(0);
    let mut residue = IntPolynomial::from_coeffs(p.coeffs[t_power..].to_vec());
    let mut factors = Vec::new();
    let mut m = 1;
    loop {
        let deg = residue.degree().unwrap_or(0);
        if deg == 0 || m > 2 * deg * deg + 2 {
            break;
        }
        if euler_phi(m) <= deg {
            let phi_m = cyclotomic(m)?;
            while let Some(q) = residue.div_exact(&phi_m)? {
                residue = q;
                factors.push(m);
            }
        }
        m += 1;
    }
    let ok = residue.degree() == Some(0) && residue.coeffs[0].abs() == 1;
    Ok((ok, CyclotomicCertificate { t_power, factors, residue }))
}

/// Exponents `b_1 <= ... <= b_(k-1)` with `prod (1 - t^b_j) = p`, if they exist.
pub fn ci_numerator_test(p: &IntPolynomial, k: usize) -> Result<Option<Vec<usize>>> {
    if p.coeff(0) != 1 {
        return Ok(None);
    }
    let mut residue = p.clone();
    let mut exponents = Vec::new();
    while residue != IntPolynomial::one() {
        // the lowest non-constant term of such a product is -t^(min b)
        let b = match residue.coeffs.iter().skip(1).position(|&c| c != 0) {
            Some(i) => i + 1,
            None => return Ok(None),
        };
        if residue.coeffs[b] > 0 || exponents.len() >= k.saturating_sub(1) {
            return Ok(None);
        }
        match residue.div_exact(&IntPolynomial::one_minus_t_pow(b))? {
            Some(q) => {
                residue = q;
                exponents.push(b);
            }
            None => return Ok(None),
        }
    }
    Ok((exponents.len() + 1 == k.max(1)).then_some(exponents))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    minimal_generators: Vec<u64>,
    frobenius: i64,
    gaps: Vec<u64>,
    #[serde(skip)]
    membership: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn build(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument("empty generator list".into()));
        }
        if generators.contains(&0) {
            return Err(Error::InvalidArgument("generators must be positive".into()));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &s| gcd(acc, s));
        if g != 1 {
            return Err(Error::InvalidArgument(format!("generators have gcd {g}, not 1")));
        }
        let smallest = gens[0] as usize;
        let largest = *gens.last().unwrap() as usize;
        // once `smallest` consecutive integers are members, all larger ones are
        let mut membership = vec![true];
        let mut run = 1;
        let mut a = 0;
        while run < smallest {
            a += 1;
            let member = gens.iter().any(|&s| a >= s as usize && membership[a - s as usize]);
            membership.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let frobenius = membership.iter().rposition(|&m| !m).map_or(-1, |f| f as i64);
        let limit = (frobenius + largest as i64).max(0) as usize;
        while membership.len() <= limit {
            let a = membership.len();
            membership.push(gens.iter().any(|&s| a >= s as usize && membership[a - s as usize]));
        }
        let gaps = (0..membership.len()).filter(|&a| !membership[a]).map(|a| a as u64).collect();
        let minimal_generators = gens
            .iter()
            .copied()
            .filter(|&s| !(1..s as usize).any(|t| membership[t] && membership[s as usize - t]))
            .collect();
        Ok(NumericalSemigroup { generators: gens, minimal_generators, frobenius, gaps, membership })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal_generators
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Largest gap, or `-1` when the semigroup is all of `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn contains(&self, a: u64) -> bool {
        self.membership.get(a as usize).copied().unwrap_or(true)
    }

    /// `p(t) = (sum_(s in S) t^s) * prod (1 - t^s_i)` over the minimal generators.
    pub fn hilbert_numerator(&self) -> Result<IntPolynomial> {
        let bound = (self.frobenius + 1) as usize + self.minimal_generators.iter().sum::<u64>() as usize;
        let len = bound + 1 + self.minimal_generators[0] as usize;
        let indicator: Vec<i64> = (0..len as u64).map(|a| i64::from(self.contains(a))).collect();
        let mut product = IntPolynomial::one();
        for &s in &self.minimal_generators {
            product = product.mul(&IntPolynomial::one_minus_t_pow(s as usize))?;
        }
        let full = IntPolynomial::from_coeffs(indicator).mul(&product)?;
        let mut coeffs = full.coeffs;
        coeffs.resize(coeffs.len().max(len), 0);
        if coeffs[bound + 1..len].iter().any(|&c| c != 0) {
            return Err(Error::Invariant(format!("numerator of {:?} is not a polynomial", self.generators)));
        }
        coeffs.truncate(bound + 1);
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub generators: Vec<u64>,
    pub minimal_generators: Vec<u64>,
    pub frobenius: i64,
    pub gaps: Vec<u64>,
    pub numerator: IntPolynomial,
    pub numerator_text: String,
    pub cyclotomic: bool,
    pub certificate: CyclotomicCertificate,
    /// Complete-intersection shape of the numerator.
    pub numerator_shape_ci: bool,
    pub ci_exponents: Option<Vec<usize>>,
    pub agree: bool,
    pub verdict: Verdict,
}

/// Compares cyclotomicity of the numerator with its complete-intersection shape.
pub fn conjecture_check(generators: &[u64]) -> Result<ConjectureReport> {
    let s = NumericalSemigroup::build(generators)?;
    let numerator = s.hilbert_numerator()?;
    let k = s.embedding_dimension();
    if numerator.order_at_one()? != k - 1 {
        return Err(Error::Invariant(format!("numerator of {:?} has the wrong order at t = 1", s.generators)));
    }
    let (cyclotomic, certificate) = is_cyclotomic(&numerator)?;
    let ci_exponents = ci_numerator_test(&numerator, k)?;
    let numerator_shape_ci = ci_exponents.is_some();
    if numerator_shape_ci && !cyclotomic {
        return Err(Error::Invariant(format!("{:?} has a product numerator that is not cyclotomic", s.generators)));
    }
    let agree = cyclotomic == numerator_shape_ci;
    Ok(ConjectureReport {
        generators: s.generators.clone(),
        minimal_generators: s.minimal_generators.clone(),
        frobenius: s.frobenius,
        gaps: s.gaps.clone(),
        numerator_text: numerator.to_string(),
        numerator,
        cyclotomic,
        certificate,
        numerator_shape_ci,
        ci_exponents,
        agree,
        verdict: if agree { Verdict::Holds } else { Verdict::Finding },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub max_generator: u64,
    pub max_generators: usize,
    pub semigroups: usize,
    pub cyclotomic: usize,
    pub numerator_shape_ci: usize,
    pub disagreements: Vec<ConjectureReport>,
    pub verdict: Verdict,
}

fn subsets_up_to(max: u64, k: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u64>> = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() < k {
            let next = cur.last().map_or(1, |&l| l + 1);
            for g in next..=max {
                let mut c = cur.clone();
                c.push(g);
                stack.push(c);
            }
        }
    }
    out
}

/// Every semigroup whose minimal generators are at most `max_generator`
/// and number at most `max_k`.
pub fn conjecture_sweep(max_generator: u64, max_k: usize) -> Result<SweepReport> {
    if max_generator == 0 || max_k == 0 {
        return Err(Error::InvalidArgument("sweep bounds must be positive".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for gens in subsets_up_to(max_generator, max_k) {
        if gens.iter().fold(0, |a, &s| gcd(a, s)) == 1 {
            seen.insert(NumericalSemigroup::build(&gens)?.minimal_generators);
        }
    }
    let minimal: Vec<Vec<u64>> = seen.into_iter().collect();
    let reports = minimal.par_iter().map(|g| conjecture_check(g)).collect::<Result<Vec<_>>>()?;
    let disagreements: Vec<ConjectureReport> = reports.iter().filter(|r| !r.agree).cloned().collect();
    Ok(SweepReport {
        max_generator,
        max_generators: max_k,
        semigroups: reports.len(),
        cyclotomic: reports.iter().filter(|r| r.cyclotomic).count(),
        numerator_shape_ci: reports.iter().filter(|r| r.numerator_shape_ci).count(),
        verdict: if disagreements.is_empty() { Verdict::Holds } else { Verdict::Finding },
        disagreements,
    })
}
