use clap::{Args, Subcommand};
use gfl_core::waring::{
    conjectured_k_rank, d_threshold, experimental_k_rank, k_rank_bounds, max_rank_facts, monomial_2rank, monomial_krank_upper,
    monomial_rank, perfect_pairs_up_to, secant_profile, DThreshold, KRankBounds, KRankUpper,
};
use gfl_core::{generic_rank, RankQuery, Verdict};
use serde::Serialize;

use crate::output::{CliError, Context, Outcome, Table};

#[derive(Subcommand, Debug)]
pub enum WaringCmd {
    /// Generic Waring rank of degree-k forms in n variables.
    GenericRank(GenericRankArgs),
    /// Bounds and conjectured value of the generic k-rank of degree-kd forms.
    KRank(KRankArgs),
    /// Waring rank and k-rank bounds of a monomial.
    Monomial(MonomialArgs),
    /// Pairs (k, d) with d + 1 dividing kd + 1.
    PerfectPairs(PerfectPairsArgs),
    /// Tangent-space dimensions of sums of k-th powers of random forms.
    Secant(QueryArgs),
    /// Known facts and bounds on the maximal k-rank.
    MaxRank(QueryArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct GenericRankArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub n: usize,
    /// Also measure the rank with tangent-space experiments.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct KRankArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub verify: bool,
    /// Scan d = 1..=this for the degree where the formula reaches k^(n-1).
    #[arg(long)]
    pub threshold_search: Option<u32>,
}

#[derive(Args, Debug, Serialize)]
pub struct MonomialArgs {
    /// Exponent vector, e.g. 1,7 for x1*x2^7.
    #[arg(long, value_delimiter = ',', required = true)]
    pub exponents: Vec<u32>,
    /// Report k-rank bounds for this k (the degree must be divisible by k).
    #[arg(long)]
    pub k: Option<u32>,
}

#[derive(Args, Debug, Serialize)]
pub struct PerfectPairsArgs {
    #[arg(long, default_value_t = 20)]
    pub kmax: u32,
    /// Largest d (default: the global --dmax, else 20).
    #[arg(long)]
    pub d_limit: Option<u32>,
}

#[derive(Args, Debug, Serialize)]
pub struct QueryArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub n: usize,
    /// Largest number of summands tried by `secant`.
    #[arg(long)]
    pub s_limit: Option<usize>,
}

#[derive(Serialize)]
struct GenericRankData {
    rank: u64,
    defective: bool,
    experimental: Option<usize>,
}

#[derive(Serialize)]
struct KRankData {
    query: RankQuery,
    bounds: KRankBounds,
    conjectured: u64,
    experimental: Option<usize>,
    threshold: Option<DThreshold>,
}

#[derive(Serialize)]
struct MonomialData {
    exponents: Vec<u32>,
    degree: u32,
    rank: u64,
    two_rank: Option<u32>,
    k: Option<u32>,
    k_rank_upper: Option<KRankUpper>,
}

/// The formula the experiments are compared against: Waring rank for
/// `d = 1`, the conjectured k-rank otherwise.
fn predicted_rank(q: RankQuery) -> Result<u64, CliError> {
    Ok(if q.d == 1 { generic_rank(q.k, q.n)? } else { conjectured_k_rank(q)? })
}

pub fn run(cmd: &WaringCmd, ctx: &Context) -> Result<Outcome, CliError> {
    match cmd {
        WaringCmd::GenericRank(a) => {
            let rank = generic_rank(a.k, a.n)?;
            let experimental = if a.verify {
                Some(experimental_k_rank(RankQuery::new(a.k, 1, a.n)?, ctx.seed, &ctx.primes, ctx.trials)?)
            } else {
                None
            };
            let verdict = experimental.map_or(Verdict::Holds, |e| Verdict::from_match(e as u64 == rank));
            let defective = gfl_core::waring::DEFECTIVE_PAIRS.contains(&(a.k, a.n));
            Outcome::new("waring generic-rank", a, verdict, &GenericRankData { rank, defective, experimental })
        }
        WaringCmd::KRank(a) => {
            let query = RankQuery::new(a.k, a.d, a.n)?;
            let bounds = k_rank_bounds(query)?;
            let conjectured = predicted_rank(query)?;
            let experimental = if a.verify {
                Some(experimental_k_rank(query, ctx.seed, &ctx.primes, ctx.trials)?)
            } else {
                None
            };
            let threshold = a.threshold_search.map(|m| d_threshold(a.k, a.n, m)).transpose()?;
            let verdict = experimental.map_or(Verdict::Holds, |e| Verdict::from_match(e as u64 == conjectured));
            Outcome::new("waring k-rank", a, verdict, &KRankData { query, bounds, conjectured, experimental, threshold })
        }
        WaringCmd::Monomial(a) => {
            let degree: u32 = a.exponents.iter().sum();
            let rank = monomial_rank(&a.exponents)?;
            let two_rank = if degree.is_multiple_of(2) && degree > 0 { Some(monomial_2rank(&a.exponents)?) } else { None };
            let k_rank_upper = a.k.map(|k| monomial_krank_upper(&a.exponents, k)).transpose()?;
            let data = MonomialData { exponents: a.exponents.clone(), degree, rank, two_rank, k: a.k, k_rank_upper };
            Outcome::new("waring monomial", a, Verdict::Holds, &data)
        }
        WaringCmd::PerfectPairs(a) => {
            let pairs = perfect_pairs_up_to(a.kmax, a.d_limit.or(ctx.dmax).unwrap_or(20));
            let mut table = Table::new(&["k", "d", "j", "quotient"]);
            for p in &pairs {
                table.push([p.k, p.d, p.j, p.quotient]);
            }
            Ok(Outcome::new("waring perfect-pairs", a, Verdict::Holds, &pairs)?.with_table(table))
        }
        WaringCmd::Secant(a) => {
            let query = RankQuery::new(a.k, a.d, a.n)?;
            let profile = secant_profile(query, a.s_limit, ctx.seed, ctx.first_prime())?;
            let predicted = predicted_rank(query)?;
            let verdict = match profile.experimental_rank {
                Some(r) => Verdict::from_match(r as u64 == predicted),
                None => Verdict::Finding,
            };
            let mut table = Table::new(&["summands", "tangent_dim", "ambient"]);
            for (s, d) in profile.dims.iter().enumerate() {
                table.push([s + 1, *d, profile.ambient]);
            }
            #[derive(Serialize)]
            struct SecantData<'a> {
                #[serde(flatten)]
                profile: &'a gfl_core::waring::SecantProfile,
                predicted: u64,
            }
            Ok(Outcome::new("waring secant", a, verdict, &SecantData { profile: &profile, predicted })?.with_table(table))
        }
        WaringCmd::MaxRank(a) => {
            let facts = max_rank_facts(a.k, a.d, a.n)?;
            Outcome::new("waring max-rank", a, Verdict::Holds, &facts)
        }
    }
}
