use clap::{Args, Subcommand};
use gfl_core::conjecture_check;
use gfl_core::semigroup::conjecture_sweep;
use serde::Serialize;

use crate::output::{CliError, Context, Outcome, Table};

#[derive(Subcommand, Debug)]
pub enum SemigroupCmd {
    /// Cyclotomic numerator against complete-intersection shape for one semigroup.
    Check(CheckArgs),
    /// The same comparison for every semigroup in a range.
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct CheckArgs {
    /// Comma-separated generators, e.g. 3,4,5.
    #[arg(long, value_delimiter = ',', required = true)]
    pub generators: Vec<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 12)]
    pub max_generator: u64,
    /// Largest number of minimal generators.
    #[arg(long, default_value_t = 4)]
    pub max_k: usize,
}

pub fn run(cmd: &SemigroupCmd, _ctx: &Context) -> Result<Outcome, CliError> {
    match cmd {
        SemigroupCmd::Check(a) => {
            let r = conjecture_check(&a.generators)?;
            let mut table = Table::new(&["degree", "coefficient"]);
            for (i, c) in r.numerator.coeffs().iter().enumerate() {
                table.push([i as i64, *c]);
            }
            Ok(Outcome::new("semigroup check", a, r.verdict, &r)?.with_table(table))
        }
        SemigroupCmd::Sweep(a) => {
            let r = conjecture_sweep(a.max_generator, a.max_k)?;
            let mut table = Table::new(&["generators", "numerator", "cyclotomic", "numerator_shape_ci"]);
            for d in &r.disagreements {
                let gens: Vec<String> = d.minimal_generators.iter().map(u64::to_string).collect();
                table.push([gens.join(" "), d.numerator_text.clone(), d.cyclotomic.to_string(), d.numerator_shape_ci.to_string()]);
            }
            Ok(Outcome::new("semigroup sweep", a, r.verdict, &r)?.with_table(table))
        }
    }
}
