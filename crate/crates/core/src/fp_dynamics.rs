//! The zero-set map `phi` and evaluation map `psi` on reduced polynomials
//! over `F_p`.
//!
//! A polynomial with every exponent below `p` is a function `F_p^n -> F_p`
//! and is stored densely: the coefficient of `x^a` sits at index
//! `a_1 + a_2 p + ... + a_n p^(n-1)`. Points of `F_p^n` use the same index,
//! which is what lets `phi` and `psi` turn points into exponents.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FpElement, PrimeField};
use crate::report::Verdict;
use crate::seed::{derive_seed, rng_from_seed};

/// Largest `p^n` handled by `phi` and `psi`.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;
/// Largest `p^n` for which `psi` is handled as an explicit matrix.
pub const PSI_MATRIX_CAP: u64 = 256;
pub const PSI_ORDER_BOUND: u64 = 10_000_000;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpFuncPoly {
    field: PrimeField,
    n: usize,
    coeffs: Vec<FpElement>,
}

fn table_size(p: u64, n: usize, cap: u64) -> Result<usize> {
    let mut size: u64 = 1;
    for _ in 0..n {
        size = size.checked_mul(p).filter(|&s| s <= cap).ok_or(Error::EnumerationCap {
            points: p.checked_pow(n as u32).unwrap_or(u64::MAX),
            cap,
        })?;
    }
    Ok(size as usize)
}

impl FpFuncPoly {
    pub fn zero(field: PrimeField, n: usize) -> Result<Self> {
        let len = table_size(field.modulus(), n, DEFAULT_ENUMERATION_CAP)?;
        Ok(FpFuncPoly { field, n, coeffs: vec![0; len] })
    }

    pub fn from_coeffs(field: PrimeField, n: usize, coeffs: Vec<FpElement>) -> Result<Self> {
        let len = table_size(field.modulus(), n, DEFAULT_ENUMERATION_CAP)?;
        if coeffs.len() != len {
            return Err(Error::InvalidArgument(format!("expected {len} coefficients, got {}", coeffs.len())));
        }
        Ok(FpFuncPoly { field, n, coeffs: coeffs.into_iter().map(|c| field.reduce(c)).collect() })
    }

    /// `x^a` for an exponent vector with entries below `p`.
    pub fn monomial(field: PrimeField, exponents: &[u32]) -> Result<Self> {
        let mut f = Self::zero(field, exponents.len())?;
        let idx = f.index_of(exponents)?;
        f.coeffs[idx] = 1;
        Ok(f)
    }

    pub fn random(field: PrimeField, n: usize, seed: u64) -> Result<Self> {
        let mut f = Self::zero(field, n)?;
        let mut rng = rng_from_seed(seed);
        for c in f.coeffs.iter_mut() {
            *c = rng.gen_range(0..field.modulus());
        }
        Ok(f)
    }

    /// Parses `c*x^e + ...` (one variable) or `c*x1^e1*x2^e2 + ...`.
    pub fn parse(text: &str, field: PrimeField, n: usize) -> Result<Self> {
        let mut f = Self::zero(field, n)?;
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in cleaned.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !cleaned[..i].ends_with('^') {
                terms.push(&cleaned[start..i]);
                start = i;
            }
        }
        terms.push(&cleaned[start..]);
        for raw in terms {
            let (negative, body) = match raw.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, raw.strip_prefix('+').unwrap_or(raw)),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("empty term in {text:?}")));
            }
            let mut coeff: FpElement = 1;
            let mut exps = vec![0u32; n];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {raw:?}")));
                }
                if factor.starts_with('x') {
                    let (var, exp) = match factor.split_once('^') {
                        Some((v, e)) => (v, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
                        None => (factor, 1),
                    };
                    let j = if var == "x" && n == 1 {
                        0
                    } else {
                        let k: usize = var[1..].parse().map_err(|_| Error::Parse(format!("bad variable {var:?}")))?;
                        if k == 0 || k > n {
                            return Err(Error::Parse(format!("variable {var:?} outside x1..x{n}")));
                        }
                        k - 1
                    };
                    exps[j] += exp;
                } else {
                    let c: i64 = factor.parse().map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
                    coeff = field.mul(coeff, field.from_i64(c));
                }
            }
            let idx = f.index_of(&exps)?;
            let c = if negative { field.neg(coeff) } else { coeff };
            f.coeffs[idx] = field.add(f.coeffs[idx], c);
        }
        Ok(f)
    }

    fn index_of(&self, exponents: &[u32]) -> Result<usize> {
        let p = self.field.modulus();
        let mut idx = 0usize;
        for &e in exponents.iter().rev() {
            if e as u64 >= p {
                return Err(Error::Parse(format!("exponent {e} must be below p = {p}")));
            }
            idx = idx * p as usize + e as usize;
        }
        Ok(idx)
    }

    fn exponents_of(&self, mut idx: usize) -> Vec<u32> {
        let p = self.field.modulus() as usize;
        (0..self.n)
            .map(|_| {
                let e = idx % p;
                idx /= p;
                e as u32
            })
            .collect()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[FpElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.field != other.field {
            return Err(Error::RingMismatch("polynomials over different rings".into()));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(FpFuncPoly { coeffs, ..self.clone() })
    }

    pub fn scale(&self, c: FpElement) -> Self {
        let c = self.field.reduce(c);
        FpFuncPoly { coeffs: self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect(), ..self.clone() }
    }

    /// Values at every point of `F_p^n`, in index order.
    pub fn evaluate_all(&self) -> Vec<FpElement> {
        let table = power_table(self.field);
        apply_separable(self.field, self.n, &table, &self.coeffs)
    }

    /// The reduced polynomial with the given value table.
    pub fn interpolate(field: PrimeField, n: usize, values: &[FpElement]) -> Result<Self> {
        let inverse = invert(field, &power_table(field))?;
        let coeffs = apply_separable(field, n, &inverse, values);
        Self::from_coeffs(field, n, coeffs)
    }
}

impl fmt::Display for FpFuncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let exps = self.exponents_of(idx);
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    let name = if self.n == 1 { "x".to_string() } else { format!("x{}", j + 1) };
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            match (c, vars.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => f.write_str(&vars.join("*"))?,
                _ => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for FpFuncPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `V[b][a] = b^a` with `0^0 = 1`.
fn power_table(field: PrimeField) -> Vec<Vec<FpElement>> {
    let p = field.modulus();
    (0..p)
        .map(|b| {
            let mut row = Vec::with_capacity(p as usize);
            let mut acc = 1;
            for _ in 0..p {
                row.push(acc);
                acc = field.mul(acc, b);
            }
            row
        })
        .collect()
}

/// Applies the `p x p` matrix along every axis of a `p^n` table.
fn apply_separable(field: PrimeField, n: usize, m: &[Vec<FpElement>], input: &[FpElement]) -> Vec<FpElement> {
    let p = m.len();
    let mut data = input.to_vec();
    let mut buf = vec![0; p];
    let mut stride = 1;
    for _ in 0..n {
        let block = stride * p;
        for base in (0..data.len()).step_by(block) {
            for off in 0..stride {
                for (i, out) in buf.iter_mut().enumerate() {
                    let mut acc = 0;
                    for (a, &c) in m[i].iter().enumerate() {
                        let v = data[base + off + a * stride];
                        if v != 0 {
                            acc = field.mul_add(acc, c, v);
                        }
                    }
                    *out = acc;
                }
                for (i, &v) in buf.iter().enumerate() {
                    data[base + off + i * stride] = v;
                }
            }
        }
        stride = block;
    }
    data
}

fn invert(field: PrimeField, m: &[Vec<FpElement>]) -> Result<Vec<Vec<FpElement>>> {
    let k = m.len();
    let mut a: Vec<Vec<FpElement>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for col in 0..k {
        let piv = (col..k).find(|&r| a[r][col] != 0).ok_or(Error::Invariant("singular matrix".into()))?;
        a.swap(col, piv);
        let inv = field.inv(a[col][col]);
        for v in a[col].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for r in 0..k {
            if r != col && a[r][col] != 0 {
                let factor = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[k..].to_vec()).collect())
}

/// `phi(f) = sum of x^a over the zeros a of f`.
pub fn phi(f: &FpFuncPoly) -> FpFuncPoly {
    let coeffs = f.evaluate_all().into_iter().map(|v| u64::from(v == 0)).collect();
    FpFuncPoly { coeffs, ..f.clone() }
}

/// `psi(f) = sum of f(a) x^a over all points a`.
pub fn psi(f: &FpFuncPoly) -> FpFuncPoly {
    FpFuncPoly { coeffs: f.evaluate_all(), ..f.clone() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    /// Steps before the orbit enters its cycle.
    pub tail: usize,
    pub cycle: usize,
}

/// Brent cycle detection on `f, phi(f), phi^2(f), ...`.
pub fn find_period_phi(f: &FpFuncPoly, step_limit: u64) -> Result<Orbit> {
    if step_limit < 1 {
        return Err(Error::InvalidArgument("step_limit must be at least 1".into()));
    }
    let mut steps = 0u64;
    let mut step = |x: &FpFuncPoly| -> Result<FpFuncPoly> {
        steps += 1;
        if steps > step_limit {
            return Err(Error::StepLimit(step_limit));
        }
        Ok(phi(x))
    };
    let mut power = 1usize;
    let mut lam = 1usize;
    let mut tortoise = f.clone();
    let mut hare = step(f)?;
    while tortoise != hare {
        if power == lam {
            tortoise = hare.clone();
            power *= 2;
            lam = 0;
        }
        hare = step(&hare)?;
        lam += 1;
    }
    let mut tortoise = f.clone();
    let mut hare = f.clone();
    for _ in 0..lam {
        hare = step(&hare)?;
    }
    let mut mu = 0;
    while tortoise != hare {
        tortoise = step(&tortoise)?;
        hare = step(&hare)?;
        mu += 1;
    }
    Ok(Orbit { tail: mu, cycle: lam })
}

/// Elements of the eventual cycle of `f` under `phi`.
pub fn phi_cycle(f: &FpFuncPoly, step_limit: u64) -> Result<Vec<FpFuncPoly>> {
    let orbit = find_period_phi(f, step_limit)?;
    let mut x = f.clone();
    for _ in 0..orbit.tail {
        x = phi(&x);
    }
    let mut cycle = Vec::with_capacity(orbit.cycle);
    for _ in 0..orbit.cycle {
        cycle.push(x.clone());
        x = phi(&x);
    }
    Ok(cycle)
}

/// Matrix of `psi` on the monomial basis, column `a` being `psi(x^a)`.
fn psi_matrix(field: PrimeField, n: usize) -> Result<Vec<Vec<FpElement>>> {
    let size = table_size(field.modulus(), n, PSI_MATRIX_CAP)?;
    let mut m = vec![vec![0; size]; size];
    for a in 0..size {
        let mut unit = vec![0; size];
        unit[a] = 1;
        let image = psi(&FpFuncPoly { field, n, coeffs: unit });
        for (b, &v) in image.coeffs.iter().enumerate() {
            m[b][a] = v;
        }
    }
    Ok(m)
}

fn mat_mul(field: PrimeField, a: &[Vec<FpElement>], b: &[Vec<FpElement>]) -> Vec<Vec<FpElement>> {
    let k = a.len();
    let mut c = vec![vec![0; k]; k];
    for i in 0..k {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..k {
                c[i][j] = field.mul_add(c[i][j], x, b[l][j]);
            }
        }
    }
    c
}

/// Least `i >= 1` with `psi^i = id`, found by repeated multiplication.
pub fn psi_order(p: u64, n: usize) -> Result<u64> {
    let field = PrimeField::new(p)?;
    let m = psi_matrix(field, n)?;
    let is_identity = |x: &[Vec<FpElement>]| x.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == u64::from(i == j)));
    let mut acc = m.clone();
    for i in 1..=PSI_ORDER_BOUND {
        if is_identity(&acc) {
            return Ok(i);
        }
        acc = mat_mul(field, &acc, &m);
    }
    Err(Error::StepLimit(PSI_ORDER_BOUND))
}

/// Rank of the matrix of `psi`.
pub fn psi_rank(p: u64, n: usize) -> Result<usize> {
    let field = PrimeField::new(p)?;
    let m = psi_matrix(field, n)?;
    Ok(crate::linalg::rank_of(field, m.len(), m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultilinearCheck {
    pub n: usize,
    pub checked: u64,
    pub exhaustive: bool,
    /// Every checked `f` has a distinct image (a bijection when exhaustive).
    pub injective: bool,
    pub phi4_identity: bool,
    /// `phi(f) = psi(f) + sum_a x^a` on every checked `f`.
    pub psi_relation: bool,
    pub verdict: Verdict,
}

/// Checks `phi` over `F_2` on multilinear polynomials: exhaustively for
/// `n <= 4`, on `samples` random inputs otherwise.
pub fn phi2_multilinear_check(n: usize, samples: usize, seed: u64) -> Result<MultilinearCheck> {
    let field = PrimeField::new(2)?;
    let size = table_size(2, n, DEFAULT_ENUMERATION_CAP)?;
    let exhaustive = n <= 4;
    let inputs: Box<dyn Iterator<Item = Vec<FpElement>>> = if exhaustive {
        Box::new((0u64..1 << size).map(move |bits| (0..size).map(|i| (bits >> i) & 1).collect()))
    } else {
        let mut rng = rng_from_seed(derive_seed(seed, &[n as u64]));
        let polys: Vec<Vec<FpElement>> = (0..samples).map(|_| (0..size).map(|_| rng.gen_range(0..2)).collect()).collect();
        Box::new(polys.into_iter())
    };
    let all_ones = FpFuncPoly { field, n, coeffs: vec![1; size] };
    let mut images = std::collections::HashSet::new();
    let mut checked = 0u64;
    let (mut injective, mut phi4_identity, mut psi_relation) = (true, true, true);
    for coeffs in inputs {
        let f = FpFuncPoly { field, n, coeffs };
        let image = phi(&f);
        psi_relation &= image == psi(&f).add(&all_ones)?;
        phi4_identity &= phi(&phi(&phi(&image))) == f;
        injective &= images.insert(image);
        checked += 1;
    }
    let ok = injective && phi4_identity && psi_relation;
    Ok(MultilinearCheck { n, checked, exhaustive, injective, phi4_identity, psi_relation, verdict: Verdict::from_holds(ok) })
}

/// `0 -> 1 + x + ... + x^(p-1) -> x -> 1 -> 0` for one variable.
pub fn zero_cycle(field: PrimeField) -> Result<Vec<FpFuncPoly>> {
    let p = field.modulus() as usize;
    Ok(vec![
        FpFuncPoly::zero(field, 1)?,
        FpFuncPoly::from_coeffs(field, 1, vec![1; p])?,
        FpFuncPoly::monomial(field, &[1])?,
        FpFuncPoly::monomial(field, &[0])?,
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCycle {
    pub start: FpFuncPoly,
    pub cycle: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSurvey {
    pub p: u64,
    pub n: usize,
    pub seed: u64,
    pub exhaustive: bool,
    pub orbits: u64,
    /// Number of orbits per eventual cycle length.
    pub cycle_lengths: BTreeMap<usize, u64>,
    /// Orbits that end in the cycle through 0.
    pub through_zero: u64,
    /// Representatives of cycles not passing through 0, one per cycle.
    pub other_cycles: Vec<Vec<FpFuncPoly>>,
    /// Cycles of odd length; each is a high-priority finding.
    pub odd_cycles: Vec<OddCycle>,
    pub verdict: Verdict,
}

/// Follows `phi` from many starting polynomials and tabulates the cycles.
/// With `exhaustive` every polynomial is used (only for tiny `p^(p^n)`).
pub fn orbit_survey(p: u64, n: usize, samples: usize, seed: u64, exhaustive: bool, step_limit: u64) -> Result<OrbitSurvey> {
    let field = PrimeField::new(p)?;
    let size = table_size(p, n, DEFAULT_ENUMERATION_CAP)?;
    let starts: Vec<FpFuncPoly> = if exhaustive {
        let total = (p as u128).checked_pow(size as u32).filter(|&t| t <= 1 << 20).ok_or(Error::EnumerationCap {
            points: u64::MAX,
            cap: 1 << 20,
        })?;
        (0..total as u64)
            .map(|mut k| {
                let coeffs = (0..size)
                    .map(|_| {
                        let c = k % p;
                        k /= p;
                        c
                    })
                    .collect();
                FpFuncPoly { field, n, coeffs }
            })
            .collect()
    } else {
        (0..samples as u64).map(|i| FpFuncPoly::random(field, n, derive_seed(seed, &[i]))).collect::<Result<_>>()?
    };
    let zero = FpFuncPoly::zero(field, n)?;
    let mut cycle_lengths = BTreeMap::new();
    let mut through_zero = 0;
    let mut other_cycles: Vec<Vec<FpFuncPoly>> = Vec::new();
    let mut odd_cycles = Vec::new();
    for f in &starts {
        let cycle = phi_cycle(f, step_limit)?;
        *cycle_lengths.entry(cycle.len()).or_insert(0) += 1;
        if cycle.contains(&zero) {
            through_zero += 1;
        } else if !other_cycles.iter().any(|c| c.contains(&cycle[0])) {
            other_cycles.push(cycle.clone());
        }
        if cycle.len() % 2 == 1 && !odd_cycles.iter().any(|o: &OddCycle| cycle.contains(&o.start)) {
            odd_cycles.push(OddCycle { start: cycle[0].clone(), cycle: cycle.len() });
        }
    }
    let verdict = if odd_cycles.is_empty() { Verdict::Holds } else { Verdict::Finding };
    Ok(OrbitSurvey {
        p,
        n,
        seed,
        exhaustive,
        orbits: starts.len() as u64,
        cycle_lengths,
        through_zero,
        other_cycles,
        odd_cycles,
        verdict,
    })
}
