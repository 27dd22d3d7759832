use clap::{Args, Subcommand};
use gfl_core::exterior::{expected_ext_series, ext_quotient_dims, lattice_path_count_transfer};
use gfl_core::{annihilator_dims, derive_seed, lattice_path_count, random_ext_form, two_quadrics_check, PrimeField, Verdict};
use serde::Serialize;

use crate::output::{CliError, Context, Outcome, Table};

#[derive(Subcommand, Debug)]
pub enum ExteriorCmd {
    /// Hilbert series of E/(f) for a random f of degree d.
    Series(FormArgs),
    /// Dimensions of the annihilator of a random f of degree d.
    Ann(AnnArgs),
    /// Lattice-path counts, by direct recursion and by transfer matrix.
    Paths(PathsArgs),
    /// Two random quadrics in E against squares of variables and linear forms in S.
    TwoQuadrics(PathsArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct FormArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct AnnArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Largest source degree (default d).
    #[arg(long)]
    pub imax: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
pub struct PathsArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Serialize)]
struct Run {
    prime: u64,
    seed: u64,
    dims: Vec<u64>,
}

pub fn run(cmd: &ExteriorCmd, ctx: &Context) -> Result<Outcome, CliError> {
    match cmd {
        ExteriorCmd::Series(a) => {
            let dmax = ctx.dmax.map_or(a.n, |d| d as usize);
            let expected: Vec<u64> = expected_ext_series(a.n, a.d, dmax)
                .to_i64_vec()
                .into_iter()
                .map(|c| c.max(0) as u64)
                .collect();
            let mut runs = Vec::new();
            for &p in &ctx.primes {
                let field = PrimeField::new(p)?;
                for t in 0..ctx.trials as u64 {
                    let seed = derive_seed(ctx.seed, &[t]);
                    let f = random_ext_form(field, a.n, a.d, seed)?;
                    let mut dims = ext_quotient_dims(a.n, field, &[f], dmax)?;
                    dims.resize(dmax + 1, 0);
                    runs.push(Run { prime: p, seed, dims });
                }
            }
            let verdict = Verdict::from_match(runs.iter().all(|r| r.dims == expected));
            let mut table = Table::new(&["degree", "expected", "observed"]);
            for (d, e) in expected.iter().enumerate() {
                let observed = runs.iter().map(|r| r.dims[d]).min().unwrap_or(0);
                table.push([d as u64, *e, observed]);
            }
            #[derive(Serialize)]
            struct SeriesData {
                expected: Vec<u64>,
                runs: Vec<Run>,
            }
            Ok(Outcome::new("exterior series", a, verdict, &SeriesData { expected, runs })?.with_table(table))
        }
        ExteriorCmd::Ann(a) => {
            let imax = a.imax.unwrap_or(a.d);
            let mut runs = Vec::new();
            for &p in &ctx.primes {
                let field = PrimeField::new(p)?;
                let seed = derive_seed(ctx.seed, &[0]);
                let f = random_ext_form(field, a.n, a.d, seed)?;
                runs.push(Run { prime: p, seed, dims: annihilator_dims(&f, imax)? });
            }
            let agree = runs.windows(2).all(|w| w[0].dims == w[1].dims);
            let mut cols = vec!["degree".to_string()];
            cols.extend(runs.iter().map(|r| format!("p{}", r.prime)));
            let mut table = Table { columns: cols, rows: Vec::new() };
            for i in 0..=imax {
                let mut row = vec![i.to_string()];
                row.extend(runs.iter().map(|r| r.dims[i].to_string()));
                table.rows.push(row);
            }
            #[derive(Serialize)]
            struct AnnData {
                kernel_dims: Vec<u64>,
                primes_agree: bool,
                runs: Vec<Run>,
            }
            let data = AnnData { kernel_dims: runs[0].dims.clone(), primes_agree: agree, runs };
            let verdict = if agree { Verdict::Holds } else { Verdict::Finding };
            Ok(Outcome::new("exterior ann", a, verdict, &data)?.with_table(table))
        }
        ExteriorCmd::Paths(a) => {
            let mut table = Table::new(&["s", "recursion", "transfer"]);
            let mut counts = Vec::new();
            for s in 1..=a.n + 1 {
                let direct = lattice_path_count(a.n, s)?;
                let transfer = lattice_path_count_transfer(a.n, s)?;
                table.push([s as u64, direct, transfer]);
                counts.push((direct, transfer));
            }
            let verdict = Verdict::from_match(counts.iter().all(|(x, y)| x == y));
            let paths: Vec<u64> = std::iter::once(1).chain(counts.iter().map(|c| c.0)).collect();
            #[derive(Serialize)]
            struct PathData {
                paths: Vec<u64>,
            }
            Ok(Outcome::new("exterior paths", a, verdict, &PathData { paths })?.with_table(table))
        }
        ExteriorCmd::TwoQuadrics(a) => {
            let reports = ctx
                .primes
                .iter()
                .map(|&p| two_quadrics_check(a.n, ctx.seed, p))
                .collect::<Result<Vec<_>, _>>()?;
            let verdict = if reports.iter().all(|r| r.verdict == Verdict::Match) { Verdict::Match } else { Verdict::Finding };
            let mut table = Table::new(&["prime", "degree", "exterior", "symmetric", "paths", "agree"]);
            for r in &reports {
                for d in 0..r.paths.len() {
                    table.push([
                        r.prime.to_string(),
                        d.to_string(),
                        r.exterior[d].to_string(),
                        r.symmetric[d].to_string(),
                        r.paths[d].to_string(),
                        r.agree[d].to_string(),
                    ]);
                }
            }
            Ok(Outcome::new("exterior two-quadrics", a, verdict, &reports)?.with_table(table))
        }
    }
}
