//! `gfl`: runs one experiment and writes a single JSON (or CSV) report to stdout.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgMatches, CommandFactory, FromArgMatches, Parser, Subcommand};
use gfl_core::{PrimeField, DEFAULT_PRIMES};

use commands::{dynamics, exterior, hilbert, lefschetz, points, semigroup, waring};
use output::{usage, CliError, Context, Format};

#[derive(Parser, Debug)]
#[command(name = "gfl", version, about = "Exact finite-field experiments on generic forms, ranks, Lefschetz maps, fat points, exterior algebras, F_p dynamics and semigroups")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct GlobalArgs {
    /// Run over this single prime.
    #[arg(long, global = true, conflicts_with = "primes")]
    prime: Option<u64>,
    /// Comma-separated primes (default: three primes near 2^20).
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    /// Root seed; every random choice is derived from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random trials per prime.
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    /// Largest degree examined (each command has its own default).
    #[arg(long, global = true)]
    dmax: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Put the wall time into the JSON report instead of stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert functions of ideals against the generic-forms series.
    #[command(subcommand)]
    Hilbert(hilbert::HilbertCmd),
    /// Waring ranks, k-ranks and secant experiments.
    #[command(subcommand)]
    Waring(waring::WaringCmd),
    /// Weak, strong and mu-Lefschetz tests.
    #[command(subcommand)]
    Lefschetz(lefschetz::LefschetzCmd),
    /// Fat points, symbolic powers and apolarity.
    #[command(subcommand)]
    Points(points::PointsCmd),
    /// Quotients of the exterior algebra.
    #[command(subcommand)]
    Exterior(exterior::ExteriorCmd),
    /// The maps phi and psi on functions F_p^n -> F_p.
    #[command(subcommand)]
    Dynamics(dynamics::DynamicsCmd),
    /// Numerical semigroups and cyclotomic numerators.
    #[command(subcommand)]
    Semigroup(semigroup::SemigroupCmd),
}

fn command_name(m: &ArgMatches) -> String {
    let mut parts = Vec::new();
    let mut cur = m;
    while let Some((name, sub)) = cur.subcommand() {
        parts.push(name.to_string());
        cur = sub;
    }
    parts.join(" ")
}

fn context(g: &GlobalArgs) -> Result<Context, CliError> {
    let primes = match (&g.prime, &g.primes) {
        (Some(p), _) => vec![*p],
        (None, Some(ps)) if !ps.is_empty() => ps.clone(),
        (None, Some(_)) => return usage("--primes needs at least one prime"),
        (None, None) => DEFAULT_PRIMES.to_vec(),
    };
    for &p in &primes {
        PrimeField::new(p)?;
    }
    if g.trials == 0 {
        return usage("--trials must be at least 1");
    }
    Ok(Context { primes, seed: g.seed, trials: g.trials, dmax: g.dmax })
}

fn init_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("GFL_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| CliError::Usage(format!("GFL_THREADS must be a positive integer, got {v:?}")))?;
        if n == 0 {
            return usage("GFL_THREADS must be a positive integer");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn dispatch(cmd: &Command, ctx: &Context) -> Result<output::Outcome, CliError> {
    match cmd {
        Command::Hilbert(c) => hilbert::run(c, ctx),
        Command::Waring(c) => waring::run(c, ctx),
        Command::Lefschetz(c) => lefschetz::run(c, ctx),
        Command::Points(c) => points::run(c, ctx),
        Command::Exterior(c) => exterior::run(c, ctx),
        Command::Dynamics(c) => dynamics::run(c, ctx),
        Command::Semigroup(c) => semigroup::run(c, ctx),
    }
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let name = command_name(&matches);
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let fail = |e: &CliError| {
        eprintln!("gfl: {e}");
        ExitCode::from(e.exit_code() as u8)
    };
    if let Err(e) = init_threads() {
        return fail(&e);
    }
    let ctx = match context(&cli.global) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let start = Instant::now();
    let result = dispatch(&cli.command, &ctx);
    let elapsed = start.elapsed();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match result {
        Ok(outcome) => {
            let wall = cli.global.timing.then_some(elapsed.as_millis() as u64);
            if !cli.global.timing {
                eprintln!("gfl: {name} finished in {:.3} s", elapsed.as_secs_f64());
            }
            if let Err(e) = output::write_outcome(&mut out, &ctx, &outcome, cli.global.format, wall) {
                return fail(&e);
            }
            let _ = out.flush();
            ExitCode::SUCCESS
        }
        Err(e) => {
            if e.exit_code() == 3 {
                let _ = output::write_error(&mut out, &ctx, &name, &e);
                let _ = out.flush();
            }
            fail(&e)
        }
    }
}
