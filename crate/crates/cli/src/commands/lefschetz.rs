use clap::{Args, Subcommand};
use gfl_core::lefschetz::top_degree;
use gfl_core::{mu_lefschetz_test, slp_test, wlp_test, LefschetzVerdict};
use serde::Serialize;

use super::hilbert::IdealArgs;
use crate::output::{CliError, Context, Outcome, Table};

#[derive(Subcommand, Debug)]
pub enum LefschetzCmd {
    /// Multiplication by a random linear form in every degree.
    Wlp(WlpArgs),
    /// Multiplication by powers l^k, k = 1..=kmax, of a random linear form.
    Slp(SlpArgs),
    /// Multiplication by a product of powers of random linear forms.
    Mu(MuArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct WlpArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ideal: IdealArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct SlpArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ideal: IdealArgs,
    /// Largest power tested (default: the top degree of the quotient).
    #[arg(long)]
    pub kmax: Option<u32>,
}

#[derive(Args, Debug, Serialize)]
pub struct MuArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ideal: IdealArgs,
    /// Exponent pattern of the multiplier, a partition.
    #[arg(long, value_delimiter = ',', required = true)]
    pub partition: Vec<u32>,
}

fn outcome(command: &'static str, params: &impl Serialize, v: LefschetzVerdict) -> Result<Outcome, CliError> {
    let mut table = Table::new(&["power", "source_degree", "target_degree", "dim_source", "dim_target", "rank", "maximal"]);
    for m in &v.maps {
        table.push([
            m.power.map_or(String::new(), |p| p.to_string()),
            m.source_degree.to_string(),
            m.target_degree.to_string(),
            m.dim_source.to_string(),
            m.dim_target.to_string(),
            m.rank.to_string(),
            m.maximal.to_string(),
        ]);
    }
    Ok(Outcome::new(command, params, v.verdict, &v)?.with_table(table))
}

pub fn run(cmd: &LefschetzCmd, ctx: &Context) -> Result<Outcome, CliError> {
    match cmd {
        LefschetzCmd::Wlp(a) => {
            let spec = a.ideal.spec(ctx)?;
            outcome("lefschetz wlp", a, wlp_test(&spec, ctx.dmax, ctx.trials, &ctx.primes)?)
        }
        LefschetzCmd::Slp(a) => {
            let spec = a.ideal.spec(ctx)?;
            let kmax = match a.kmax {
                Some(k) => k,
                None => ctx.dmax.map_or_else(|| top_degree(&spec), Ok)?.max(1),
            };
            outcome("lefschetz slp", a, slp_test(&spec, ctx.dmax, kmax, ctx.trials, &ctx.primes)?)
        }
        LefschetzCmd::Mu(a) => {
            let spec = a.ideal.spec(ctx)?;
            outcome("lefschetz mu", a, mu_lefschetz_test(&spec, &a.partition, ctx.dmax, ctx.trials, &ctx.primes)?)
        }
    }
}
