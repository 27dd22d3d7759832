//! Waring and `k`-rank formulas, monomial bounds, and a tangent-space
//! experiment for generic `k`-ranks.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::arith::{binomial, ceil_div, dim_forms};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::form::{random_form_in, Form};
use crate::linalg::Echelon;
use crate::monomial::{basis, Monomial};
use crate::seed::derive_seed;

/// `(k, d, n)`: `k`-th powers of degree-`d` forms in `n` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankQuery {
    pub k: u32,
    pub d: u32,
    pub n: usize,
}

impl RankQuery {
    pub fn new(k: u32, d: u32, n: usize) -> Result<Self> {
        if k < 1 || d < 1 || n < 1 {
            return Err(Error::InvalidArgument(format!("k, d, n must be positive (got k={k}, d={d}, n={n})")));
        }
        Ok(RankQuery { k, d, n })
    }

    pub fn total_degree(&self) -> u32 {
        self.k * self.d
    }
}

fn to_u64(x: BigUint, what: &'static str) -> Result<u64> {
    x.to_u64().ok_or(Error::Overflow(what))
}

fn require_k_at_least_two(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2".into()));
    }
    Ok(())
}

/// `(k, n)` pairs whose generic rank exceeds the parameter count by one.
pub const DEFECTIVE_PAIRS: [(u32, usize); 4] = [(4, 3), (4, 4), (4, 5), (3, 5)];

/// Generic Waring rank of degree-`k` forms in `n` variables.
pub fn generic_rank(k: u32, n: usize) -> Result<u64> {
    if k < 1 || n < 1 {
        return Err(Error::InvalidArgument("k and n must be positive".into()));
    }
    if k == 2 {
        return Ok(n as u64);
    }
    let base = to_u64(ceil_div(&dim_forms(n, k as u64), &BigUint::from(n)), "generic rank")?;
    Ok(if DEFECTIVE_PAIRS.contains(&(k, n)) { base + 1 } else { base })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KRankBounds {
    /// Parameter count `ceil(dim S_{kd} / dim S_d)`.
    pub lower: u64,
    /// `k^(n-1)`.
    pub upper: u64,
}

pub fn k_rank_bounds(q: RankQuery) -> Result<KRankBounds> {
    require_k_at_least_two(q.k)?;
    let lower = ceil_div(&dim_forms(q.n, q.total_degree() as u64), &dim_forms(q.n, q.d as u64));
    let upper = (q.k as u64)
        .checked_pow(q.n as u32 - 1)
        .ok_or(Error::Overflow("k^(n-1)"))?;
    Ok(KRankBounds { lower: to_u64(lower, "k-rank lower bound")?, upper })
}

/// Conjectured generic `k`-rank: the least `s` whose secant parameter count
/// fills `S_{kd}`, corrected by `C(s, 2)` for `k = 2`.
pub fn conjectured_k_rank(q: RankQuery) -> Result<u64> {
    require_k_at_least_two(q.k)?;
    let a = dim_forms(q.n, q.d as u64);
    let b = dim_forms(q.n, q.total_degree() as u64);
    if q.k >= 3 {
        return to_u64(ceil_div(&b, &a), "conjectured k-rank");
    }
    // s*a - C(s,2) increases for s <= a and peaks at s = a.
    let a = a.to_u128().ok_or(Error::Overflow("dim S_d"))?;
    let b = b.to_u128().ok_or(Error::Overflow("dim S_2d"))?;
    let value = |s: u128| s * a - s * (s - 1) / 2;
    if value(a) < b {
        return Err(Error::Unsatisfiable(format!("no s reaches {b} for k=2, d={}, n={}", q.d, q.n)));
    }
    let (mut lo, mut hi) = (1u128, a);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if value(mid) >= b {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    u64::try_from(lo).map_err(|_| Error::Overflow("conjectured k-rank"))
}

/// Result of scanning the conjectured formula for its stable value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DThreshold {
    pub k: u32,
    pub n: usize,
    /// `k^(n-1)`, the limit of the parameter count as `d` grows.
    pub target: u64,
    pub dmax_search: u32,
    /// Least `d0` such that the formula equals `target` on all of
    /// `d0..=dmax_search`; `None` when not reached.
    pub threshold: Option<u32>,
    pub values: Vec<u64>,
    /// Derived from the conjectured formula, not a proven value.
    pub conjectural: bool,
}

pub fn d_threshold(k: u32, n: usize, dmax_search: u32) -> Result<DThreshold> {
    require_k_at_least_two(k)?;
    if dmax_search < 1 {
        return Err(Error::InvalidArgument("dmax_search must be at least 1".into()));
    }
    let target = (k as u64).checked_pow(n as u32 - 1).ok_or(Error::Overflow("k^(n-1)"))?;
    let values = (1..=dmax_search)
        .map(|d| conjectured_k_rank(RankQuery::new(k, d, n)?))
        .collect::<Result<Vec<_>>>()?;
    let stable_tail = values.iter().rev().take_while(|&&v| v == target).count();
    let threshold = (stable_tail > 0).then(|| dmax_search - stable_tail as u32 + 1);
    Ok(DThreshold { k, n, target, dmax_search, threshold, values, conjectural: true })
}

/// Positive exponents in ascending order.
fn normalize(exponents: &[u32]) -> Vec<u32> {
    let mut a: Vec<u32> = exponents.iter().copied().filter(|&e| e > 0).collect();
    a.sort_unstable();
    a
}

/// Classical Waring rank of a monomial: `prod (a_i + 1) / (a_1 + 1)`.
pub fn monomial_rank(exponents: &[u32]) -> Result<u64> {
    let a = normalize(exponents);
    let Some(&smallest) = a.first() else { return Ok(1) };
    let mut prod = BigUint::one();
    for &e in &a {
        prod *= e as u64 + 1;
    }
    to_u64(prod / (smallest as u64 + 1), "monomial rank")
}

/// 2-rank of a monomial of even degree: 1 if it is a square, else 2.
pub fn monomial_2rank(exponents: &[u32]) -> Result<u32> {
    let total: u32 = exponents.iter().sum();
    if !total.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("monomial degree {total} is odd")));
    }
    Ok(if exponents.iter().all(|e| e % 2 == 0) { 1 } else { 2 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KRankUpper {
    pub bound: u64,
    pub power_of_two: u64,
    /// `k`, present when `d >= n(k-2)`.
    pub large_degree: Option<u64>,
    /// `max(a mod k, b mod k) + 1` for binary monomials.
    pub binary_remainders: Option<u64>,
    /// 1 when the monomial is itself a `k`-th power.
    pub perfect_power: Option<u64>,
}

/// Minimum of the known upper bounds for the `k`-rank of a monomial.
pub fn monomial_krank_upper(exponents: &[u32], k: u32) -> Result<KRankUpper> {
    if k < 3 {
        return Err(Error::InvalidArgument("k-rank bounds for monomials need k >= 3".into()));
    }
    let a = normalize(exponents);
    let total: u32 = a.iter().sum();
    if !total.is_multiple_of(k) {
        return Err(Error::InvalidArgument(format!("degree {total} is not divisible by k = {k}")));
    }
    let d = (total / k) as u64;
    let n = a.len() as u64;
    let power_of_two = 1u64.checked_shl(k - 1).ok_or(Error::Overflow("2^(k-1)"))?;
    let large_degree = (d >= n * (k as u64 - 2)).then_some(k as u64);
    let binary_remainders = (a.len() == 2).then(|| (a[0] % k).max(a[1] % k) as u64 + 1);
    let perfect_power = a.iter().all(|e| e % k == 0).then_some(1);
    let bound = [Some(power_of_two), large_degree, binary_remainders, perfect_power]
        .into_iter()
        .flatten()
        .min()
        .unwrap();
    Ok(KRankUpper { bound, power_of_two, large_degree, binary_remainders, perfect_power })
}

/// Writes `m1 * m2` as `g1^2 + g2^2` with `g1 = (m1 + m2)/2`,
/// `g2 = i (m1 - m2)/2`, checking the identity before returning.
pub fn two_square_decomposition(m1: &Form, m2: &Form) -> Result<(Form, Form)> {
    if m1.degree() != m2.degree() {
        return Err(Error::InvalidArgument(format!(
            "factors must have equal degree (got {} and {})",
            m1.degree(),
            m2.degree()
        )));
    }
    let field = m1.field();
    let i = field.sqrt_neg_one()?;
    let half = field.inv(2);
    let g1 = m1.add(m2)?.scale(half);
    let g2 = m1.sub(m2)?.scale(field.mul(i, half));
    let lhs = g1.power(2).add(&g2.power(2))?;
    if lhs != m1.mul(m2)? {
        return Err(Error::Invariant("two-square identity failed".into()));
    }
    Ok((g1, g2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectPair {
    pub k: u32,
    pub d: u32,
    /// The family index: `k = j d + j + 1`.
    pub j: u32,
    /// `(kd + 1)/(d + 1) = j d + 1`.
    pub quotient: u32,
}

/// `(k, d)` is perfect when `d + 1` divides `kd + 1`.
pub fn perfect_pair(k: u32, d: u32) -> Option<PerfectPair> {
    if k < 1 || d < 1 || !(k as u64 * d as u64 + 1).is_multiple_of(d as u64 + 1) {
        return None;
    }
    let j = (k - 1) / (d + 1);
    debug_assert_eq!(k, j * d + j + 1);
    Some(PerfectPair { k, d, j, quotient: j * d + 1 })
}

/// All perfect pairs with `k, d <= bound`.
pub fn perfect_pairs_up_to(kmax: u32, dmax: u32) -> Vec<PerfectPair> {
    (1..=kmax)
        .flat_map(|k| (1..=dmax).filter_map(move |d| perfect_pair(k, d)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownValue {
    pub statement: &'static str,
    pub k: u32,
    pub monomial_exponents: Option<Vec<u32>>,
    pub value: u64,
}

/// Literature values kept for cross-checking.
pub fn known_values() -> Vec<KnownValue> {
    vec![
        KnownValue { statement: "4-rank of x1*x2^7", k: 4, monomial_exponents: Some(vec![1, 7]), value: 4 },
        KnownValue { statement: "maximal 2-rank of binary forms", k: 2, monomial_exponents: None, value: 2 },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxRankFacts {
    pub query: RankQuery,
    /// Proven maximal `k`-rank, when known.
    pub exact: Option<u64>,
    /// Upper bound from the two-square identity (binary, `k = 2`).
    pub two_square_upper: Option<u64>,
    /// Generic value used for the bound below.
    pub generic_value: u64,
    /// True when the generic value comes from the conjectured formula.
    pub generic_conjectural: bool,
    /// Twice the generic value.
    pub doubling_upper: u64,
    /// Conjectured maximal value for binary forms.
    pub conjectured_binary: Option<u64>,
    pub registry: Vec<KnownValue>,
}

pub fn max_rank_facts(k: u32, d: u32, n: usize) -> Result<MaxRankFacts> {
    let query = RankQuery::new(k, d, n)?;
    require_k_at_least_two(k)?;
    let (generic_value, generic_conjectural) =
        if d == 1 { (generic_rank(k, n)?, false) } else { (conjectured_k_rank(query)?, true) };
    let exact = match (n, d) {
        (1, _) => Some(1),
        (2, 1) => Some(k as u64),
        (2, _) if k == 2 => Some(2),
        _ => None,
    };
    Ok(MaxRankFacts {
        query,
        exact,
        two_square_upper: (k == 2 && n <= 2).then_some(2),
        generic_value,
        generic_conjectural,
        doubling_upper: generic_value * 2,
        conjectured_binary: (n == 2).then_some(k as u64),
        registry: known_values(),
    })
}

fn tangent_rows(g: &Form, k: u32, d: u32) -> Result<Vec<Vec<u64>>> {
    let gk = g.power(k - 1);
    Ok(basis(g.n(), d)
        .monomials()
        .iter()
        .map(|m: &Monomial| gk.mul_monomial(m).coeffs().to_vec())
        .collect())
}

/// Dimension of the span of `g_i^(k-1) * S_d` for `s` random forms `g_i`
/// of degree `d`: the tangent space to the `s`-th secant at a random point.
pub fn secant_dimension(q: RankQuery, s: usize, seed: u64, prime: u64) -> Result<usize> {
    if s < 1 {
        return Err(Error::InvalidArgument("s must be at least 1".into()));
    }
    Ok(*secant_profile(q, Some(s), seed, prime)?.dims.last().unwrap())
}

/// Tangent-space dimensions for `s = 1, 2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecantProfile {
    pub query: RankQuery,
    pub seed: u64,
    pub prime: u64,
    pub ambient: usize,
    /// `dims[s-1]` is the tangent-space dimension with `s` summands.
    pub dims: Vec<usize>,
    /// Least `s` filling `S_{kd}`; the experimental generic `k`-rank.
    pub experimental_rank: Option<usize>,
}

/// Adds summands until the span fills `S_{kd}` or `s_limit` is reached.
pub fn secant_profile(q: RankQuery, s_limit: Option<usize>, seed: u64, prime: u64) -> Result<SecantProfile> {
    let field = PrimeField::new(prime)?;
    let ambient = basis(q.n, q.total_degree()).len();
    let mut ech = Echelon::new(field, ambient);
    let mut dims = Vec::new();
    let limit = s_limit.unwrap_or(ambient);
    for i in 0..limit {
        if !ech.is_full() {
            let g = random_form_in(field, q.n, q.d, derive_seed(seed, &[i as u64]));
            for row in tangent_rows(&g, q.k, q.d)? {
                if ech.insert(row) && ech.is_full() {
                    break;
                }
            }
        }
        dims.push(ech.rank());
        if s_limit.is_none() && ech.is_full() {
            break;
        }
    }
    let experimental_rank = dims.iter().position(|&r| r == ambient).map(|i| i + 1);
    Ok(SecantProfile { query: q, seed, prime, ambient, dims, experimental_rank })
}

/// Experimental generic `k`-rank: smallest over the given primes and
/// trials, since special choices can only shrink the tangent space.
pub fn experimental_k_rank(q: RankQuery, seed: u64, primes: &[u64], trials: usize) -> Result<usize> {
    let mut best: Option<usize> = None;
    for &p in primes {
        for t in 0..trials.max(1) as u64 {
            let prof = secant_profile(q, None, derive_seed(seed, &[t]), p)?;
            let r = prof.experimental_rank.ok_or(Error::Invariant("tangent span never filled S_kd".into()))?;
            best = Some(best.map_or(r, |b| b.min(r)));
        }
    }
    best.ok_or(Error::InvalidArgument("at least one prime is required".into()))
}

/// `C(n+d-1, n-1)` as `u64`.
pub fn dim_forms_u64(n: usize, d: u32) -> Result<u64> {
    to_u64(binomial((n + d as usize - 1) as u64, (n - 1) as u64), "dim S_d")
}
