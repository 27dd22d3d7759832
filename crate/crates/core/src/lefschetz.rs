//! Maximal-rank tests for multiplication maps on `A = S/I`.
//!
//! A map `A_i -> A_{i+e}` has maximal rank when its rank is
//! `min(dim A_i, dim A_{i+e})`. Rank can only drop on a closed set of
//! multipliers, so one random multiplier reaching maximal rank certifies
//! the generic behavior over that prime. A map is declared deficient only
//! after every trial over every prime falls short.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FpElement, PrimeField};
use crate::form::{random_form_in, Form};
use crate::hilbert::{random_mu_product, span_of_spec, validate_partition, GradedSpan, IdealSpec};
use crate::monomial::basis;
use crate::report::Verdict;
use crate::seed::derive_seed;

/// Rank of one multiplication map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MapRank {
    pub source_degree: u32,
    pub target_degree: u32,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: usize,
}

impl MapRank {
    pub fn expected(&self) -> usize {
        self.dim_source.min(self.dim_target)
    }

    pub fn is_maximal(&self) -> bool {
        self.rank == self.expected()
    }
}

/// Rank of `x multiplier : A_i -> A_{i+e}` on an already built span.
pub fn map_rank(span: &GradedSpan, multiplier: &Form, i: u32) -> Result<MapRank> {
    if multiplier.n() != span.n() || multiplier.field() != span.field() {
        return Err(Error::RingMismatch("multiplier is not in the ring of the ideal".into()));
    }
    let e = multiplier.degree();
    let source = span.piece(i)?;
    let target = span.piece(i + e)?;
    let mut ech = target.echelon().clone();
    let before = ech.rank();
    if !multiplier.is_zero() {
        let b = basis(span.n(), i);
        for &idx in source.standard_monomials() {
            if ech.is_full() {
                break;
            }
            let image: Vec<FpElement> = target.project(&multiplier.mul_monomial(b.unrank(idx)));
            ech.insert(image);
        }
    }
    Ok(MapRank {
        source_degree: i,
        target_degree: i + e,
        dim_source: source.quotient_dim(),
        dim_target: target.quotient_dim(),
        rank: ech.rank() - before,
    })
}

/// Rank of `x multiplier : A_i -> A_{i+e}` where `A = S/I` for `spec`.
pub fn multiplication_rank(spec: &IdealSpec, multiplier: &Form, i: u32, dmax_span: u32) -> Result<MapRank> {
    let e = multiplier.degree();
    if i + e > dmax_span {
        return Err(Error::DegreeOutOfRange { degree: i + e, limit: dmax_span });
    }
    map_rank(&span_of_spec(spec, dmax_span)?, multiplier, i)
}

/// Largest `d` with `A_d != 0`, or an error when `A` is not visibly Artinian.
pub fn top_degree(spec: &IdealSpec) -> Result<u32> {
    let mut degrees = spec.generator_degrees()?;
    if degrees.len() < spec.n {
        return Err(Error::InvalidArgument(
            "fewer generators than variables: the quotient is not Artinian, pass an explicit dmax".into(),
        ));
    }
    degrees.sort_unstable();
    let bound: u32 = degrees[..spec.n].iter().map(|d| d - 1).sum::<u32>() + 1;
    let hf = span_of_spec(spec, bound)?.hilbert_function();
    if hf[bound as usize] != 0 {
        return Err(Error::InvalidArgument(format!(
            "quotient is nonzero in degree {bound}; pass an explicit dmax"
        )));
    }
    Ok(hf.iter().rposition(|&h| h != 0).unwrap_or(0) as u32)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "property", rename_all = "kebab-case")]
pub enum LefschetzProperty {
    Wlp,
    Slp { kmax: u32 },
    Mu { mu: Vec<u32> },
}

/// Rank shortfall of one map over one prime (best trial).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Deficit {
    pub prime: u64,
    pub best_rank: usize,
    pub deficit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapRecord {
    /// Exponent of the multiplier power for SLP maps.
    pub power: Option<u32>,
    pub source_degree: u32,
    pub target_degree: u32,
    pub dim_source: usize,
    pub dim_target: usize,
    /// Best rank over all primes and trials.
    pub rank: usize,
    pub maximal: bool,
    /// Per-prime shortfalls, filled only for deficient maps.
    pub deficits: Vec<Deficit>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzVerdict {
    #[serde(flatten)]
    pub property: LefschetzProperty,
    pub spec: IdealSpec,
    pub dmax: u32,
    pub seed: u64,
    pub trials: usize,
    pub primes: Vec<u64>,
    pub hilbert_function: Vec<u64>,
    pub maps: Vec<MapRecord>,
    pub holds: bool,
    pub verdict: Verdict,
}

impl LefschetzVerdict {
    pub fn failing_maps(&self) -> impl Iterator<Item = &MapRecord> {
        self.maps.iter().filter(|m| !m.maximal)
    }
}

type MultiplierFactory<'a> = dyn Fn(PrimeField, usize, u64) -> Result<Vec<(Option<u32>, Form)>> + Sync + 'a;

fn run(
    spec: &IdealSpec,
    property: LefschetzProperty,
    dmax: Option<u32>,
    trials: usize,
    primes: &[u64],
    multipliers: &MultiplierFactory<'_>,
) -> Result<LefschetzVerdict> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if primes.is_empty() {
        return Err(Error::InvalidArgument("at least one prime is required".into()));
    }
    let dmax = match dmax {
        Some(d) => d,
        None => top_degree(spec)?,
    };
    let per_prime: Vec<(Vec<u64>, Vec<(Option<u32>, MapRank)>)> = primes
        .par_iter()
        .map(|&p| {
            let s = spec.clone().with_prime(p);
            let span = span_of_spec(&s, dmax)?;
            let hf = span.hilbert_function();
            let field = span.field();
            let mut best: Vec<(Option<u32>, MapRank)> = Vec::new();
            for t in 0..trials as u64 {
                let mults = multipliers(field, spec.n, derive_seed(spec.seed, &[0x1ef5, t]))?;
                let mut slot = 0;
                for (label, m) in &mults {
                    let e = m.degree();
                    for i in 0..=dmax.saturating_sub(e) {
                        if hf[i as usize] == 0 || i + e > dmax {
                            continue;
                        }
                        let r = map_rank(&span, m, i)?;
                        if slot == best.len() {
                            best.push((*label, r));
                        } else if r.rank > best[slot].1.rank {
                            best[slot].1 = r;
                        }
                        slot += 1;
                    }
                }
            }
            Ok((hf, best))
        })
        .collect::<Result<_>>()?;

    let (hf0, template) = &per_prime[0];
    let mut maps = Vec::with_capacity(template.len());
    for (slot, &(power, r0)) in template.iter().enumerate() {
        let mut best = r0;
        let mut maximal = false;
        let mut deficits = Vec::new();
        for (&p, (_, recs)) in primes.iter().zip(&per_prime) {
            let r = recs.get(slot).map(|x| x.1).ok_or_else(|| {
                Error::Invariant("primes disagree on which maps exist; Hilbert functions differ".into())
            })?;
            if r.is_maximal() {
                maximal = true;
            } else {
                deficits.push(Deficit { prime: p, best_rank: r.rank, deficit: r.expected() - r.rank });
            }
            if r.rank > best.rank {
                best = r;
            }
        }
        if maximal {
            deficits.clear();
        }
        maps.push(MapRecord {
            power,
            source_degree: best.source_degree,
            target_degree: best.target_degree,
            dim_source: best.dim_source,
            dim_target: best.dim_target,
            rank: best.rank,
            maximal,
            deficits,
        });
    }
    let holds = maps.iter().all(|m| m.maximal);
    Ok(LefschetzVerdict {
        property,
        spec: spec.clone(),
        dmax,
        seed: spec.seed,
        trials,
        primes: primes.to_vec(),
        hilbert_function: hf0.clone(),
        maps,
        holds,
        verdict: Verdict::from_holds(holds),
    })
}

/// Weak Lefschetz test: `x l` for random linear `l` at every degree.
pub fn wlp_test(spec: &IdealSpec, dmax: Option<u32>, trials: usize, primes: &[u64]) -> Result<LefschetzVerdict> {
    run(spec, LefschetzProperty::Wlp, dmax, trials, primes, &|field, n, seed| {
        Ok(vec![(None, random_form_in(field, n, 1, seed))])
    })
}

/// Strong Lefschetz test: `x l^k` for `k = 1..=kmax` with the same `l`.
pub fn slp_test(spec: &IdealSpec, dmax: Option<u32>, kmax: u32, trials: usize, primes: &[u64]) -> Result<LefschetzVerdict> {
    if kmax < 1 {
        return Err(Error::InvalidArgument("kmax must be at least 1".into()));
    }
    run(spec, LefschetzProperty::Slp { kmax }, dmax, trials, primes, &|field, n, seed| {
        let l = random_form_in(field, n, 1, seed);
        Ok((1..=kmax).map(|k| (Some(k), l.power(k))).collect())
    })
}

/// `mu`-Lefschetz test: multiplication by `l_1^{mu_1} ... l_k^{mu_k}`.
pub fn mu_lefschetz_test(
    spec: &IdealSpec,
    mu: &[u32],
    dmax: Option<u32>,
    trials: usize,
    primes: &[u64],
) -> Result<LefschetzVerdict> {
    validate_partition(mu)?;
    run(spec, LefschetzProperty::Mu { mu: mu.to_vec() }, dmax, trials, primes, &|field, n, seed| {
        Ok(vec![(None, random_mu_product(field, n, mu, seed)?)])
    })
}
