//! Monomials and the canonical graded-reverse-lexicographic basis of `S_d`.
//!
//! Bases are built once per `(n, d)` and shared through a process-wide cache;
//! every dense coefficient vector in the crate is indexed by these tables.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exponents: vec![0; n] }
    }

    pub fn variable(n: usize, j: usize) -> Self {
        let mut exponents = vec![0; n];
        exponents[j] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.exponents)
    }
}

/// Writes `x1^a1*x2^a2...` (or `x^a` when there is a single variable).
pub(crate) fn write_monomial(f: &mut impl fmt::Write, exps: &[u32]) -> fmt::Result {
    let mut first = true;
    for (j, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if exps.len() == 1 {
            f.write_char('x')?;
        } else {
            write!(f, "x{}", j + 1)?;
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_char('1')?;
    }
    Ok(())
}

/// Graded reverse lexicographic comparison.
///
/// Higher degree wins; within a degree, the monomial whose last differing
/// exponent is smaller is the larger one.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// All monomials of one degree, sorted from the grevlex-largest down.
#[derive(Debug)]
pub struct MonomialBasis {
    n: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Box<[u32]>, usize>,
}

impl MonomialBasis {
    fn build(n: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut current = vec![0u32; n];
        compositions(&mut current, 0, degree, &mut monomials);
        monomials.sort_by(|a, b| grevlex_cmp(b.exponents(), a.exponents()));
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.exponents.clone().into_boxed_slice(), i))
            .collect();
        MonomialBasis { n, degree, monomials, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn unrank(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn rank(&self, exponents: &[u32]) -> Option<usize> {
        self.index.get(exponents).copied()
    }
}

fn compositions(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let n = current.len();
    if n == 0 {
        if remaining == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if pos == n - 1 {
        current[pos] = remaining;
        out.push(Monomial::new(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        current[pos] = e;
        compositions(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

type BasisCache = Mutex<HashMap<(usize, u32), Arc<MonomialBasis>>>;
type ShiftCache = Mutex<HashMap<(usize, u32), Arc<Vec<Vec<usize>>>>>;

fn basis_cache() -> &'static BasisCache {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn shift_cache() -> &'static ShiftCache {
    static CACHE: OnceLock<ShiftCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared basis of `S_d` in `n` variables.
pub fn basis(n: usize, d: u32) -> Arc<MonomialBasis> {
    if let Some(b) = basis_cache().lock().unwrap().get(&(n, d)) {
        return Arc::clone(b);
    }
    let built = Arc::new(MonomialBasis::build(n, d));
    let mut cache = basis_cache().lock().unwrap();
    Arc::clone(cache.entry((n, d)).or_insert(built))
}

/// The monomials of degree `d` in `n` variables in grevlex order.
pub fn monomial_basis(n: usize, d: u32) -> Vec<Monomial> {
    basis(n, d).monomials().to_vec()
}

/// `table[j][i]` is the index in degree `d + 1` of `x_j` times monomial `i` of degree `d`.
pub fn variable_shift(n: usize, d: u32) -> Arc<Vec<Vec<usize>>> {
    if let Some(t) = shift_cache().lock().unwrap().get(&(n, d)) {
        return Arc::clone(t);
    }
    let src = basis(n, d);
    let dst = basis(n, d + 1);
    let table: Vec<Vec<usize>> = (0..n)
        .map(|j| {
            let mut buf = vec![0u32; n];
            src.monomials()
                .iter()
                .map(|m| {
                    buf.copy_from_slice(m.exponents());
                    buf[j] += 1;
                    dst.rank(&buf).expect("shifted monomial lies in the next degree")
                })
                .collect()
        })
        .collect();
    let table = Arc::new(table);
    let mut cache = shift_cache().lock().unwrap();
    Arc::clone(cache.entry((n, d)).or_insert(table))
}
