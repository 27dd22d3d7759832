//! Exterior algebra on `n` generators over `F_p`.
//!
//! A basis element `e_S` is a subset `S` of `{0, .., n-1}` stored as a bit
//! mask. Masks with `d` bits in increasing numeric order are exactly the
//! `d`-subsets in colex order, which is the coefficient order of [`ExtForm`].

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;
use serde::Serialize;

use crate::arith::binomial_u64;
use crate::error::{Error, Result};
use crate::field::{FpElement, PrimeField};
use crate::form::Form;
use crate::hilbert::graded_span;
use crate::linalg::{rank_of, Echelon};
use crate::report::Verdict;
use crate::seed::{derive_seed, rng_from_seed};
use crate::series::IntSeries;

pub const MAX_GENERATORS: usize = 30;

fn subsets(n: usize, d: usize) -> Arc<Vec<u32>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<Vec<u32>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(n, d)) {
        return v.clone();
    }
    let mut out = Vec::new();
    if d <= n {
        if d == 0 {
            out.push(0);
        } else {
            // Gosper's hack walks masks of fixed popcount in increasing order.
            let mut x: u64 = (1u64 << d) - 1;
            while x < (1u64 << n) {
                out.push(x as u32);
                let c = x & x.wrapping_neg();
                let r = x + c;
                x = (((r ^ x) >> 2) / c) | r;
            }
        }
    }
    let v = Arc::new(out);
    cache.lock().unwrap().insert((n, d), v.clone());
    v
}

/// Colex rank of a subset: `sum C(c_i, i + 1)` over its sorted elements.
pub fn colex_rank(mask: u32) -> usize {
    let mut rank = 0u64;
    let mut m = mask;
    let mut i = 1;
    while m != 0 {
        let c = m.trailing_zeros() as u64;
        rank += small_binomial(c, i);
        i += 1;
        m &= m - 1;
    }
    rank as usize
}

fn small_binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for j in 0..k {
        r = r * (n - j) / (j + 1);
    }
    r
}

/// Sign of `e_S * e_T` for disjoint `S, T`: parity of pairs `s > t`.
pub fn product_sign(s: u32, t: u32) -> bool {
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (s >> j >> 1).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

/// Homogeneous element of the exterior algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtForm {
    field: PrimeField,
    n: usize,
    degree: usize,
    coeffs: Vec<FpElement>,
}

impl ExtForm {
    fn check_n(n: usize) -> Result<()> {
        if n > MAX_GENERATORS {
            return Err(Error::InvalidArgument(format!("at most {MAX_GENERATORS} exterior generators")));
        }
        Ok(())
    }

    pub fn zero(field: PrimeField, n: usize, degree: usize) -> Result<Self> {
        Self::check_n(n)?;
        Ok(ExtForm { field, n, degree, coeffs: vec![0; subsets(n, degree).len()] })
    }

    pub fn from_coeffs(field: PrimeField, n: usize, degree: usize, coeffs: Vec<FpElement>) -> Result<Self> {
        Self::check_n(n)?;
        let len = subsets(n, degree).len();
        if coeffs.len() != len {
            return Err(Error::InvalidArgument(format!("expected {len} coefficients, got {}", coeffs.len())));
        }
        Ok(ExtForm { field, n, degree, coeffs: coeffs.into_iter().map(|c| field.reduce(c)).collect() })
    }

    /// `c * e_S` for a set of generator indices (0-based).
    pub fn basis_element(field: PrimeField, n: usize, indices: &[usize], c: FpElement) -> Result<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if i >= n || mask & (1 << i) != 0 {
                return Err(Error::InvalidArgument(format!("bad generator index set {indices:?}")));
            }
            mask |= 1 << i;
        }
        let mut f = Self::zero(field, n, indices.len())?;
        let sign = permutation_is_odd(indices);
        f.coeffs[colex_rank(mask)] = if sign { field.neg(field.reduce(c)) } else { field.reduce(c) };
        Ok(f)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[FpElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &ExtForm) -> Result<ExtForm> {
        self.same_space(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(ExtForm { coeffs, ..self.clone() })
    }

    pub fn scale(&self, c: FpElement) -> ExtForm {
        let c = self.field.reduce(c);
        ExtForm { coeffs: self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect(), ..self.clone() }
    }

    fn same_space(&self, other: &ExtForm) -> Result<()> {
        if self.n != other.n || self.degree != other.degree || self.field != other.field {
            return Err(Error::RingMismatch("exterior forms live in different spaces".into()));
        }
        Ok(())
    }

    fn terms(&self) -> impl Iterator<Item = (u32, FpElement)> + '_ {
        let subs = subsets(self.n, self.degree);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (subs[i], c))
    }
}

fn permutation_is_odd(indices: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..indices.len() {
        for j in i + 1..indices.len() {
            if indices[i] > indices[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

impl fmt::Display for ExtForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c != 1 || mask == 0 {
                write!(f, "{c}")?;
                if mask != 0 {
                    f.write_str("*")?;
                }
            }
            if mask != 0 {
                let idx: Vec<String> = (0..self.n).filter(|i| mask & (1 << i) != 0).map(|i| (i + 1).to_string()).collect();
                write!(f, "e{}", idx.join("_"))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Graded product `f * g`.
pub fn ext_mul(f: &ExtForm, g: &ExtForm) -> Result<ExtForm> {
    if f.n != g.n || f.field != g.field {
        return Err(Error::RingMismatch(format!("exterior algebras on {} and {} generators", f.n, g.n)));
    }
    let field = f.field;
    let mut out = ExtForm::zero(field, f.n, f.degree + g.degree)?;
    if f.degree + g.degree > f.n {
        return Ok(out);
    }
    let right: Vec<(u32, FpElement)> = g.terms().collect();
    for (s, a) in f.terms() {
        for &(t, b) in &right {
            if s & t != 0 {
                continue;
            }
            let idx = colex_rank(s | t);
            let prod = field.mul(a, b);
            out.coeffs[idx] = if product_sign(s, t) { field.sub(out.coeffs[idx], prod) } else { field.add(out.coeffs[idx], prod) };
        }
    }
    Ok(out)
}

/// Uniformly random element of `E_d`.
pub fn random_ext_form(field: PrimeField, n: usize, d: usize, seed: u64) -> Result<ExtForm> {
    let mut rng = rng_from_seed(derive_seed(seed, &[n as u64, d as u64]));
    let len = subsets(n.min(MAX_GENERATORS), d).len();
    let coeffs = (0..len).map(|_| rng.gen_range(0..field.modulus())).collect();
    ExtForm::from_coeffs(field, n, d, coeffs)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sides {
    Left,
    Both,
}

fn ideal_dims(gens: &[ExtForm], n: usize, field: PrimeField, dmax: usize, sides: Sides) -> Result<Vec<u64>> {
    for g in gens {
        if g.n != n || g.field != field {
            return Err(Error::RingMismatch("generators live in different exterior algebras".into()));
        }
    }
    let mut dims = Vec::with_capacity(dmax + 1);
    let mut prev: Option<Echelon> = None;
    for d in 0..=dmax {
        let subs = subsets(n, d);
        let mut ech = Echelon::new(field, subs.len());
        if d > 0 {
            if let Some(p) = &prev {
                let below = subsets(n, d - 1);
                'rows: for row in p.rows() {
                    for j in 0..n {
                        let bit = 1u32 << j;
                        for side in [Sides::Left, Sides::Both] {
                            if side == Sides::Both && sides == Sides::Left {
                                continue;
                            }
                            let mut v = vec![0; subs.len()];
                            let mut nonzero = false;
                            for (c, &a) in row.iter().enumerate() {
                                let s = below[c];
                                if a == 0 || s & bit != 0 {
                                    continue;
                                }
                                let odd = if side == Sides::Left { product_sign(bit, s) } else { product_sign(s, bit) };
                                v[colex_rank(s | bit)] = if odd { field.neg(a) } else { a };
                                nonzero = true;
                            }
                            if nonzero {
                                ech.insert(v);
                                if ech.is_full() {
                                    break 'rows;
                                }
                            }
                        }
                    }
                }
            }
        }
        for g in gens.iter().filter(|g| g.degree == d) {
            ech.insert(g.coeffs.clone());
        }
        dims.push(ech.rank() as u64);
        prev = Some(ech);
    }
    Ok(dims)
}

/// `dim (E/(gens))_d` for `d = 0..=dmax`, building the ideal from left
/// multiples. For homogeneous generators `e_j f = ±f e_j`, so left and
/// two-sided spans agree degreewise.
pub fn ext_quotient_dims(n: usize, field: PrimeField, gens: &[ExtForm], dmax: usize) -> Result<Vec<u64>> {
    let dmax = dmax.min(n);
    let ideal = ideal_dims(gens, n, field, dmax, Sides::Left)?;
    Ok(ideal
        .iter()
        .enumerate()
        .map(|(d, &i)| subsets(n, d).len() as u64 - i)
        .collect())
}

/// Same as [`ext_quotient_dims`] but adding right multiples too.
pub fn ext_quotient_dims_two_sided(n: usize, field: PrimeField, gens: &[ExtForm], dmax: usize) -> Result<Vec<u64>> {
    let dmax = dmax.min(n);
    let ideal = ideal_dims(gens, n, field, dmax, Sides::Both)?;
    Ok(ideal
        .iter()
        .enumerate()
        .map(|(d, &i)| subsets(n, d).len() as u64 - i)
        .collect())
}

/// `[(1+t)^n (1-t^d)]_+` up to `cap`.
pub fn expected_ext_series(n: usize, d: usize, cap: usize) -> IntSeries {
    IntSeries::one_plus_t_pow(n, cap).mul_one_minus_t_pow(d).truncate_plus()
}

/// `dim ker (x f : E_i -> E_{i + deg f})` for `i = 0..=imax`.
pub fn annihilator_dims(f: &ExtForm, imax: usize) -> Result<Vec<u64>> {
    let n = f.n;
    (0..=imax)
        .map(|i| {
            let source = subsets(n, i);
            if i + f.degree > n {
                return Ok(source.len() as u64);
            }
            let rows = source.iter().map(|&s| -> Result<Vec<FpElement>> {
                let e = ExtForm::from_coeffs(f.field, n, i, unit(source.len(), colex_rank(s)))?;
                Ok(ext_mul(&e, f)?.coeffs)
            });
            let rows = rows.collect::<Result<Vec<_>>>()?;
            let target = subsets(n, i + f.degree).len();
            Ok((source.len() - rank_of(f.field, target, rows)) as u64)
        })
        .collect()
}

fn unit(len: usize, i: usize) -> Vec<FpElement> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

fn check_path_args(n: usize, s: usize) -> Option<(usize, usize)> {
    let width = (n + 2).checked_sub(2 * s)?;
    Some((width, n + 2))
}

/// Number of paths from `(0, 0)` to `(W, H)` with steps `(x ± 1, y + 1)`
/// and `0 <= x <= W`, where `W = n + 2 - 2s` and `H = n + 2`.
pub fn lattice_path_count(n: usize, s: usize) -> Result<u64> {
    let Some((w, h)) = check_path_args(n, s) else { return Ok(0) };
    if w == 0 {
        return Ok(u64::from(h == 0));
    }
    let mut cells = vec![0u64; w + 1];
    cells[0] = 1;
    for _ in 0..h {
        let mut next = vec![0u64; w + 1];
        for x in 0..=w {
            let c = cells[x];
            if c == 0 {
                continue;
            }
            if x > 0 {
                next[x - 1] = next[x - 1].checked_add(c).ok_or(Error::Overflow("lattice paths"))?;
            }
            if x < w {
                next[x + 1] = next[x + 1].checked_add(c).ok_or(Error::Overflow("lattice paths"))?;
            }
        }
        cells = next;
    }
    Ok(cells[w])
}

/// Same count as `(T^H)[0][W]` for the path transfer matrix `T`.
pub fn lattice_path_count_transfer(n: usize, s: usize) -> Result<u64> {
    let Some((w, h)) = check_path_args(n, s) else { return Ok(0) };
    let size = w + 1;
    let mul = |a: &[Vec<u64>], b: &[Vec<u64>]| -> Result<Vec<Vec<u64>>> {
        let mut c = vec![vec![0u64; size]; size];
        for i in 0..size {
            for k in 0..size {
                if a[i][k] == 0 {
                    continue;
                }
                for j in 0..size {
                    let t = a[i][k].checked_mul(b[k][j]).ok_or(Error::Overflow("transfer matrix"))?;
                    c[i][j] = c[i][j].checked_add(t).ok_or(Error::Overflow("transfer matrix"))?;
                }
            }
        }
        Ok(c)
    };
    let mut t = vec![vec![0u64; size]; size];
    for x in 0..size {
        if x > 0 {
            t[x][x - 1] = 1;
        }
        if x + 1 < size {
            t[x][x + 1] = 1;
        }
    }
    let mut acc: Vec<Vec<u64>> = (0..size).map(|i| unit(size, i)).collect();
    let mut e = h;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &t)?;
        }
        e >>= 1;
        if e > 0 {
            t = mul(&t, &t)?;
        }
    }
    Ok(acc[0][w])
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoQuadricsReport {
    pub n: usize,
    pub seed: u64,
    pub prime: u64,
    /// `E/(f, g)` for two random quadrics.
    pub exterior: Vec<u64>,
    /// `S/(x_1^2, ..., x_n^2, l_1^2, l_2^2)` for random linear `l_i`.
    pub symmetric: Vec<u64>,
    /// `1, a(n, 1), a(n, 2), ...`.
    pub paths: Vec<u64>,
    pub agree: Vec<bool>,
    pub verdict: Verdict,
}

/// Compares the three sequences degree by degree for `d = 0..=n + 1`.
pub fn two_quadrics_check(n: usize, seed: u64, prime: u64) -> Result<TwoQuadricsReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("two-quadrics comparison needs n >= 2".into()));
    }
    let field = PrimeField::new(prime)?;
    let top = n + 1;
    let f = random_ext_form(field, n, 2, derive_seed(seed, &[0]))?;
    let g = random_ext_form(field, n, 2, derive_seed(seed, &[1]))?;
    let mut exterior = ext_quotient_dims(n, field, &[f, g], n)?;
    exterior.resize(top + 1, 0);

    let mut gens: Vec<Form> = (0..n)
        .map(|j| Form::variable(field, n, j).power(2))
        .collect();
    for i in 0..2u64 {
        gens.push(crate::form::random_form_in(field, n, 1, derive_seed(seed, &[2 + i])).power(2));
    }
    let symmetric = graded_span(field, n, &gens, top as u32)?.hilbert_function();

    let paths = (0..=top)
        .map(|s| if s == 0 { Ok(1) } else { lattice_path_count(n, s) })
        .collect::<Result<Vec<_>>>()?;
    let agree: Vec<bool> = (0..=top).map(|d| exterior[d] == symmetric[d] && symmetric[d] == paths[d]).collect();
    let verdict = if agree.iter().all(|&a| a) { Verdict::Match } else { Verdict::Finding };
    Ok(TwoQuadricsReport { n, seed, prime, exterior, symmetric, paths, agree, verdict })
}

/// `dim E_d` as `u64`.
pub fn ext_dim(n: usize, d: usize) -> Result<u64> {
    binomial_u64(n as u64, d as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_PRIMES;
    use proptest::prelude::*;

    fn fp() -> PrimeField {
        PrimeField::new(DEFAULT_PRIMES[0]).unwrap()
    }

    fn e(n: usize, idx: &[usize]) -> ExtForm {
        ExtForm::basis_element(fp(), n, idx, 1).unwrap()
    }

    #[test]
    fn colex_order_and_rank() {
        let subs = subsets(4, 2);
        let listed: Vec<Vec<usize>> =
            subs.iter().map(|&m| (0..4).filter(|i| m & (1 << i) != 0).collect()).collect();
        assert_eq!(listed, [vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
        for n in 0..=12 {
            let mut total = 0;
            for d in 0..=n {
                let subs = subsets(n, d);
                assert_eq!(subs.len() as u64, ext_dim(n, d).unwrap());
                for (i, &m) in subs.iter().enumerate() {
                    assert_eq!(colex_rank(m), i);
                }
                total += subs.len();
            }
            assert_eq!(total, 1 << n);
        }
    }

    #[test]
    fn anticommutation() {
        let e12 = ext_mul(&e(3, &[0]), &e(3, &[1])).unwrap();
        assert_eq!(e12, e(3, &[0, 1]));
        let e21 = ext_mul(&e(3, &[1]), &e(3, &[0])).unwrap();
        assert_eq!(e21, e(3, &[0, 1]).scale(fp().neg(1)));
        assert!(ext_mul(&e(3, &[2]), &e(3, &[2])).unwrap().is_zero());
        assert_eq!(e(3, &[1, 0]), e(3, &[0, 1]).scale(fp().neg(1)));
        assert_eq!(e(3, &[0, 1]).to_string(), "e1_2");
        let f = fp();
        for seed in 0..20 {
            let odd = random_ext_form(f, 6, 3, seed).unwrap();
            assert!(ext_mul(&odd, &odd).unwrap().is_zero());
            let a = random_ext_form(f, 7, 2, seed).unwrap();
            let b = random_ext_form(f, 7, 4, seed + 100).unwrap();
            assert_eq!(ext_mul(&a, &b).unwrap(), ext_mul(&b, &a).unwrap());
        }
        assert!(ext_mul(&e(3, &[0]), &e(4, &[0])).is_err());
    }

    /// Oracle for the sign: sort the concatenated index list by bubble swaps.
    fn sign_by_sorting(s: u32, t: u32) -> bool {
        let mut seq: Vec<u32> = (0..32).filter(|i| s & (1 << i) != 0).collect();
        seq.extend((0..32).filter(|i| t & (1 << i) != 0));
        permutation_is_odd(&seq.iter().map(|&x| x as usize).collect::<Vec<_>>())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn sign_rule(s in 0u32..4096, t in 0u32..4096) {
            let t = t & !s;
            prop_assert_eq!(product_sign(s, t), sign_by_sorting(s, t));
            let graded = (s.count_ones() * t.count_ones()) % 2 == 1;
            prop_assert_eq!(product_sign(s, t) ^ product_sign(t, s), graded);
        }

        #[test]
        fn associativity_on_basis(a in 0u32..1024, b in 0u32..1024, c in 0u32..1024) {
            let f = fp();
            let mk = |m: u32| ExtForm::basis_element(f, 10, &(0..10).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>(), 1).unwrap();
            let (x, y, z) = (mk(a), mk(b), mk(c));
            let left = ext_mul(&ext_mul(&x, &y).unwrap(), &z).unwrap();
            let right = ext_mul(&x, &ext_mul(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn quotient_examples() {
        let f = fp();
        assert_eq!(ext_quotient_dims(5, f, &[], 5).unwrap(), [1, 5, 10, 10, 5, 1]);
        let q = random_ext_form(f, 4, 2, 1).unwrap();
        let dims = ext_quotient_dims(4, f, &[q], 4).unwrap();
        assert_eq!(dims, [1, 4, 5, 0, 0]);
        assert_eq!(expected_ext_series(4, 2, 4).to_i64_vec(), [1, 4, 5, 0, 0]);
        assert_eq!(expected_ext_series(2, 2, 4).to_i64_vec(), [1, 2, 0, 0, 0]);
        assert_eq!(expected_ext_series(3, 5, 3).to_i64_vec(), [1, 3, 3, 1]);
    }

    #[test]
    fn left_and_two_sided_spans_agree() {
        let f = fp();
        for (n, degrees) in [(6, vec![3]), (7, vec![2, 3]), (6, vec![1, 4]), (8, vec![3, 3])] {
            let gens: Vec<ExtForm> =
                degrees.iter().enumerate().map(|(i, &d)| random_ext_form(f, n, d, i as u64 + 40).unwrap()).collect();
            assert_eq!(
                ext_quotient_dims(n, f, &gens, n).unwrap(),
                ext_quotient_dims_two_sided(n, f, &gens, n).unwrap()
            );
        }
    }

    #[test]
    fn even_forms_give_expected_series() {
        for &p in &DEFAULT_PRIMES[..2] {
            let f = PrimeField::new(p).unwrap();
            for n in 2..=8 {
                for d in [2, 4] {
                    let g = random_ext_form(f, n, d, 5).unwrap();
                    let got = ext_quotient_dims(n, f, &[g], n).unwrap();
                    let want: Vec<u64> = expected_ext_series(n, d, n).to_i64_vec().into_iter().map(|c| c as u64).collect();
                    assert_eq!(got, want, "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn annihilator_examples() {
        let f = fp();
        let e1 = e(5, &[0]);
        assert_eq!(annihilator_dims(&e1, 1).unwrap()[1], 1);
        let cubic = random_ext_form(f, 9, 3, 3).unwrap();
        assert_eq!(annihilator_dims(&cubic, 3).unwrap()[3], 4);
    }

    #[test]
    fn principal_ideal_sits_in_annihilator() {
        let f = fp();
        for (n, d) in [(7, 3), (8, 3), (6, 1), (9, 5)] {
            let g = random_ext_form(f, n, d, 8).unwrap();
            let ann = annihilator_dims(&g, n - d).unwrap();
            let quotient = ext_quotient_dims(n, f, std::slice::from_ref(&g), n).unwrap();
            for i in 0..=n - d {
                let principal = ext_dim(n, i).unwrap() - quotient[i];
                assert!(principal <= ann[i], "n={n} d={d} i={i}");
            }
            for idx in [vec![0], vec![1, 2]] {
                let h = ext_mul(&g, &e(n, &idx)).unwrap();
                assert!(ext_mul(&g, &h).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn lattice_paths() {
        for n in 0..=14 {
            assert_eq!(lattice_path_count(n, 0).unwrap(), 1);
            assert_eq!(lattice_path_count(n, 1).unwrap(), n as u64);
            for s in 0..=7 {
                assert_eq!(lattice_path_count(n, s).unwrap(), lattice_path_count_transfer(n, s).unwrap(), "n={n} s={s}");
            }
        }
        assert_eq!(lattice_path_count(2, 2).unwrap(), 0);
        assert_eq!(lattice_path_count(2, 5).unwrap(), 0);
    }

    #[test]
    fn two_quadrics_low_degrees() {
        let r = two_quadrics_check(4, 1, DEFAULT_PRIMES[0]).unwrap();
        assert_eq!((r.exterior[0], r.symmetric[0], r.paths[0]), (1, 1, 1));
        assert_eq!((r.exterior[1], r.symmetric[1], r.paths[1]), (4, 4, 4));
        assert!(two_quadrics_check(1, 1, DEFAULT_PRIMES[0]).is_err());
    }
}
