use clap::{Args, Subcommand};
use gfl_core::fp_dynamics::{orbit_survey, phi2_multilinear_check, phi_cycle, psi_rank};
use gfl_core::{find_period_phi, psi_order, FpFuncPoly, PrimeField, Verdict};
use serde::Serialize;

use crate::output::{CliError, Context, Outcome, Table};

#[derive(Subcommand, Debug)]
pub enum DynamicsCmd {
    /// Orbit of one polynomial under phi, or a survey of many.
    PhiOrbit(PhiOrbitArgs),
    /// Multiplicative order of psi.
    PsiOrder(PsiOrderArgs),
    /// phi on multilinear polynomials over F_2.
    Phi2(Phi2Args),
}

#[derive(Args, Debug, Serialize)]
pub struct PhiOrbitArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Starting polynomial, e.g. "1 + x^63"; without it a survey is run.
    #[arg(long)]
    pub poly: Option<String>,
    /// Random starting polynomials in a survey.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Survey every polynomial (only for tiny p^(p^n)).
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 1_000_000)]
    pub step_limit: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct PsiOrderArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct Phi2Args {
    #[arg(long)]
    pub n: usize,
    /// Random inputs when n is too large for exhaustive checking.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

pub fn run(cmd: &DynamicsCmd, ctx: &Context) -> Result<Outcome, CliError> {
    match cmd {
        DynamicsCmd::PhiOrbit(a) => {
            let field = PrimeField::new(a.p)?;
            match &a.poly {
                Some(text) => {
                    let f = FpFuncPoly::parse(text, field, a.n)?;
                    let orbit = find_period_phi(&f, a.step_limit)?;
                    let cycle = phi_cycle(&f, a.step_limit)?;
                    let mut table = Table::new(&["step", "polynomial"]);
                    for (i, g) in cycle.iter().enumerate() {
                        table.push([i.to_string(), g.to_string()]);
                    }
                    #[derive(Serialize)]
                    struct OrbitData {
                        start: FpFuncPoly,
                        tail: usize,
                        cycle_length: usize,
                        cycle: Vec<FpFuncPoly>,
                    }
                    let verdict = if orbit.cycle % 2 == 1 { Verdict::Finding } else { Verdict::Holds };
                    let data = OrbitData { start: f, tail: orbit.tail, cycle_length: orbit.cycle, cycle };
                    Ok(Outcome::new("dynamics phi-orbit", a, verdict, &data)?.with_table(table))
                }
                None => {
                    let s = orbit_survey(a.p, a.n, a.samples, ctx.seed, a.exhaustive, a.step_limit)?;
                    let mut table = Table::new(&["cycle_length", "orbits"]);
                    for (len, count) in &s.cycle_lengths {
                        table.push([*len as u64, *count]);
                    }
                    Ok(Outcome::new("dynamics phi-orbit", a, s.verdict, &s)?.with_table(table))
                }
            }
        }
        DynamicsCmd::PsiOrder(a) => {
            #[derive(Serialize)]
            struct PsiData {
                p: u64,
                n: usize,
                order: u64,
                rank: usize,
            }
            let data = PsiData { p: a.p, n: a.n, order: psi_order(a.p, a.n)?, rank: psi_rank(a.p, a.n)? };
            Outcome::new("dynamics psi-order", a, Verdict::Holds, &data)
        }
        DynamicsCmd::Phi2(a) => {
            let r = phi2_multilinear_check(a.n, a.samples, ctx.seed)?;
            Outcome::new("dynamics phi2", a, r.verdict, &r)
        }
    }
}
