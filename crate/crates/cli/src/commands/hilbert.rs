use clap::{Args, Subcommand, ValueEnum};
use gfl_core::hilbert::default_dmax;
use gfl_core::{compare_to_froberg, IdealSpec, Recipe};
use serde::Serialize;

use crate::output::{usage, CliError, Context, Outcome, Table};

#[derive(Subcommand, Debug)]
pub enum HilbertCmd {
    /// Random forms of the given degrees.
    Generic(GenericArgs),
    /// Powers l_1^d, ..., l_r^d of random linear forms.
    Power(PowerArgs),
    /// r products of powers of random linear forms with exponents mu.
    MuPower(MuPowerArgs),
    /// k-th powers of r random forms of degree d.
    Nicklasson(NicklassonArgs),
    /// x_1^d_1, ..., x_n^d_n, (x_1 + ... + x_n)^d_(n+1).
    Stanley(WitnessArgs),
    /// x_1^d_1, ..., x_n^d_n and a complete homogeneous symmetric polynomial.
    Gottlieb(WitnessArgs),
    /// The k-th power of (x_1^d, ..., x_n^d).
    Tndk(TndkArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct GenericArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<u32>,
}

#[derive(Args, Debug, Serialize)]
pub struct PowerArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub d: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct MuPowerArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_delimiter = ',', required = true)]
    pub mu: Vec<u32>,
    #[arg(long)]
    pub r: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct NicklassonArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub k: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct WitnessArgs {
    #[arg(long)]
    pub n: usize,
    /// n + 1 degrees.
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<u32>,
}

#[derive(Args, Debug, Serialize)]
pub struct TndkArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub k: u32,
}

/// Ideal choice for commands that take an arbitrary recipe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecipeKind {
    Generic,
    Power,
    MuPower,
    Nicklasson,
    Stanley,
    Gottlieb,
    MonomialCi,
    Tndk,
}

#[derive(Args, Debug, Serialize)]
pub struct IdealArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub recipe: RecipeKind,
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<u32>>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    pub mu: Option<Vec<u32>>,
}

fn need<T: Clone>(v: &Option<T>, flag: &str, recipe: RecipeKind) -> Result<T, CliError> {
    match v {
        Some(x) => Ok(x.clone()),
        None => usage(format!("recipe {recipe:?} needs --{flag}")),
    }
}

impl IdealArgs {
    pub fn spec(&self, ctx: &Context) -> Result<IdealSpec, CliError> {
        let k = self.recipe;
        let recipe = match k {
            RecipeKind::Generic => Recipe::Generic { degrees: need(&self.degrees, "degrees", k)? },
            RecipeKind::Power => Recipe::PowerIdeal { r: need(&self.r, "r", k)?, d: need(&self.d, "d", k)? },
            RecipeKind::MuPower => Recipe::MuPower { mu: need(&self.mu, "mu", k)?, r: need(&self.r, "r", k)? },
            RecipeKind::Nicklasson => {
                Recipe::PowersOfGeneric { r: need(&self.r, "r", k)?, d: need(&self.d, "d", k)?, k: need(&self.k, "k", k)? }
            }
            RecipeKind::Stanley => Recipe::Stanley { degrees: need(&self.degrees, "degrees", k)? },
            RecipeKind::Gottlieb => Recipe::Gottlieb { degrees: need(&self.degrees, "degrees", k)? },
            RecipeKind::MonomialCi => Recipe::MonomialCi { degrees: need(&self.degrees, "degrees", k)? },
            RecipeKind::Tndk => Recipe::Tndk { d: need(&self.d, "d", k)?, k: need(&self.k, "k", k)? },
        };
        let spec = IdealSpec::new(self.n, recipe).with_seed(ctx.seed).with_prime(ctx.first_prime());
        spec.generator_degrees()?;
        Ok(spec)
    }
}

fn compare(command: &'static str, params: &impl Serialize, n: usize, recipe: Recipe, ctx: &Context) -> Result<Outcome, CliError> {
    let spec = IdealSpec::new(n, recipe).with_seed(ctx.seed).with_prime(ctx.first_prime());
    let degrees = spec.generator_degrees()?;
    let dmax = match ctx.dmax.or_else(|| default_dmax(n, &degrees)) {
        Some(d) => d,
        None => return usage("the expected series never vanishes here; pass --dmax"),
    };
    let cmp = compare_to_froberg(&spec, dmax, ctx.trials, &ctx.primes)?;
    let mut table = Table::new(&["degree", "expected", "observed"]);
    for (d, (e, o)) in cmp.expected.iter().zip(&cmp.consensus).enumerate() {
        table.push([d as u64, *e, *o]);
    }
    Ok(Outcome::new(command, params, cmp.verdict, &cmp)?.with_table(table))
}

pub fn run(cmd: &HilbertCmd, ctx: &Context) -> Result<Outcome, CliError> {
    match cmd {
        HilbertCmd::Generic(a) => compare("hilbert generic", a, a.n, Recipe::Generic { degrees: a.degrees.clone() }, ctx),
        HilbertCmd::Power(a) => compare("hilbert power", a, a.n, Recipe::PowerIdeal { r: a.r, d: a.d }, ctx),
        HilbertCmd::MuPower(a) => compare("hilbert mu-power", a, a.n, Recipe::MuPower { mu: a.mu.clone(), r: a.r }, ctx),
        HilbertCmd::Nicklasson(a) => {
            compare("hilbert nicklasson", a, a.n, Recipe::PowersOfGeneric { r: a.r, d: a.d, k: a.k }, ctx)
        }
        HilbertCmd::Stanley(a) => compare("hilbert stanley", a, a.n, Recipe::Stanley { degrees: a.degrees.clone() }, ctx),
        HilbertCmd::Gottlieb(a) => compare("hilbert gottlieb", a, a.n, Recipe::Gottlieb { degrees: a.degrees.clone() }, ctx),
        HilbertCmd::Tndk(a) => compare("hilbert tndk", a, a.n, Recipe::Tndk { d: a.d, k: a.k }, ctx),
    }
}
